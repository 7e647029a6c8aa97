// Copyright 2026 The Bargmann Teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bargmann/gaussian_form.hpp"
#include "bargmann/linalg.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann::fock {

/// Coefficients ⟨n_1..n_m|ψ⟩ with n_k ≤ cutoff. Mode 0 is the most
/// significant index, so the flat layout matches Kronecker products with
/// mode 0 on the left.
class FockTensor {
 public:
  FockTensor(std::size_t modes, std::size_t cutoff);
  FockTensor(std::size_t modes, std::size_t cutoff, CVector data);

  std::size_t modes() const { return modes_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.size()); }
  const CVector& data() const { return data_; }
  CVector& data() { return data_; }

  std::size_t flat_index(const std::vector<std::size_t>& n) const;
  cplx operator()(const std::vector<std::size_t>& n) const { return data_(flat_index(n)); }
  double norm() const { return data_.norm(); }

 private:
  std::size_t modes_;
  std::size_t cutoff_;
  CVector data_;
};

/// How cutoff-rule violations are reported. Strict mode turns the warning
/// into CutoffError; it defaults to BARGMANN_STRICT=1 in the environment.
struct OracleOptions {
  bool strict = false;
  std::function<void(const std::string&)> warn;

  static OracleOptions from_environment();
};

/// max(20, ceil(10(|α|+|γ|)² + 10e^{2g}))
std::size_t required_cutoff(double alpha_abs, double gamma_abs, double g);

/// Reports (or, in strict mode, throws on) cutoff < required.
void check_cutoff(std::size_t cutoff, std::size_t required, const OracleOptions& options);

struct Ladder {
  CMatrix a;
  CMatrix adag;
};

/// a|n⟩ = √n|n−1⟩ on {|0⟩..|N⟩}.
Ladder ladder_matrices(std::size_t cutoff);

/// op acting on one mode of an m-mode truncated space.
CMatrix on_mode(const CMatrix& op, std::size_t mode, std::size_t modes);

/// exp(αa† − ᾱa)
CMatrix fock_displacement(cplx alpha, std::size_t cutoff);
/// exp((g/2)(a†² − a²)); maps vacuum to the squeezed vacuum with tanh g.
CMatrix fock_squeezer(double g, std::size_t cutoff);
/// exp(i·iθ(a₁†a₂ − a₁a₂†)) on two modes, built one photon-number sector at
/// a time.
CMatrix fock_beam_splitter(double theta, std::size_t cutoff);
/// exp(itH), H = Σ(f̄_j a_j + f_j a_j†)
CMatrix fock_linear_hamiltonian(const CVector& f, double t, std::size_t cutoff);
/// exp(itH), H = ½(a†Ba† + aB̄a + 2a†Ca)
CMatrix fock_quadratic_hamiltonian(const transforms::QuadraticGenerator& gen, std::size_t cutoff);
/// The truncated generator H itself.
CMatrix fock_quadratic_generator(const CMatrix& b, const CMatrix& c, std::size_t cutoff);

// Sparse H = Σ ½(B_jk a_j†a_k† + B̄_jk a_j a_k) + C_jk a_j†a_k on (N+1)^m states.
SparseCMatrix sparse_quadratic_generator(const CMatrix& b, const CMatrix& c, std::size_t cutoff);

// exp(factor·h)·v by Taylor steps; never forms the dense exponential.
CVector expm_action(const SparseCMatrix& h, cplx factor, const CVector& v);

// exp(itH)·v for a quadratic generator; the route for multi-mode cutoffs
// where the dense matrix would not fit.
CVector fock_apply_quadratic(const transforms::QuadraticGenerator& gen, std::size_t cutoff,
                             const CVector& v);

/// Coefficients e^{−|α|²/2}αⁿ/√n!.
CVector fock_coherent(cplx alpha, std::size_t cutoff);

/// max |U†U − I| over indices with every n_k ≤ cutoff/2.
double truncation_leakage(const CMatrix& u, std::size_t modes, std::size_t cutoff);

/// Fock coefficients ⟨n|f⟩ of any Gaussian state on at most 3 modes, with
/// no check on the mass beyond the cutoff. Delta-normalized forms are
/// allowed: their coefficients exist even though their norm does not.
FockTensor expand_to_fock(const core::GaussianForm& f, std::size_t cutoff);

/// Fock coefficients of a normalizable Gaussian state on at most 3 modes.
/// Throws CutoffError when the mass beyond the cutoff exceeds max_tail.
FockTensor state_to_fock(const core::GaussianForm& f, std::size_t cutoff, double max_tail = 1e-6);

/// |⟨γ|φ⟩| with φ = Σ qⁿ D(α)|n⟩⟨n|D(α)†|γ⟩, by truncated matrices.
double oracle_teleport_cv(cplx gamma, cplx alpha, double q, std::size_t cutoff,
                          const OracleOptions& options = OracleOptions::from_environment());

}  // namespace bargmann::fock
