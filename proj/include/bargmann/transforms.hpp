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

#include "bargmann/gaussian_form.hpp"
#include "bargmann/linalg.hpp"

namespace bargmann::transforms {

using core::GaussianForm;

/// Bogoliubov data b = Φa + Ψa†, stored as the pair (Φ, Ψ).
struct SymplecticPair {
  CMatrix phi;
  CMatrix psi;

  std::size_t size() const { return static_cast<std::size_t>(phi.rows()); }
  static SymplecticPair identity(std::size_t n);

  /// [[Φ, Ψ], [Ψ̄, Φ̄]]
  CMatrix block() const;
  /// Reads (Φ, Ψ) off the top row of a 2n×2n block matrix.
  static SymplecticPair from_block(const CMatrix& m);
};

/// Pair whose block matrix is block(lhs)·block(rhs).
SymplecticPair operator*(const SymplecticPair& lhs, const SymplecticPair& rhs);

inline constexpr double kConstraintTolerance = 1e-10;
inline constexpr double kExtractedTolerance = 1e-8;
inline constexpr double kGeneratorTolerance = 1e-12;

/// Largest entry of ΦΨᵀ − ΨΦᵀ and of ΦΦ† − ΨΨ† − I.
struct SymplecticReport {
  double symmetry_residual = 0.0;
  double unitarity_residual = 0.0;
  bool ok(double tol = kConstraintTolerance) const {
    return symmetry_residual <= tol && unitarity_residual <= tol;
  }
};

SymplecticReport check_symplectic(const CMatrix& phi, const CMatrix& psi);

/// Throws ConstraintViolation naming the first failed equation.
void require_symplectic(const SymplecticPair& s, double tol = kConstraintTolerance);

/// H = ½(a†Ba† + aB̄a + 2a†Ca), evolved for time t.
struct QuadraticGenerator {
  CMatrix b;
  CMatrix c;
  double t = 1.0;

  /// 𝒜 = [[−C, −B], [B̄, C̄]]
  CMatrix evolution_matrix() const;
  /// Throws ConstraintViolation unless B is symmetric and C Hermitian.
  void validate() const;
};

/// (Φ, Ψ) read off e^{it𝒜}; throws NumericalFailure if the result breaks
/// the constraint equations beyond kExtractedTolerance.
SymplecticPair bogoliubov_from_generator(const QuadraticGenerator& gen);

/// Kernel of U with U a_j U⁻¹ = a_j + f_j:
/// exp(−½|f|²)·exp Σ(ū_j v_j + f̄_j v_j − f_j ū_j).
GaussianForm inhomogeneous_kernel(const CVector& f);

/// Kernel of the unitary implementing (Φ, Ψ), with positive c.
GaussianForm bogoliubov_kernel(const SymplecticPair& s);

/// Kernel of exp(itH), H = Σ(f̄_j a_j + f_j a_j†):
/// exp(−½t²|f|²)·exp Σ(ū_j v_j + it f̄_j v_j + it f_j ū_j).
GaussianForm linear_hamiltonian_kernel(const CVector& f, double t);

/// Kernel of exp(itH) for a quadratic generator, phase included. The
/// square root in c follows t continuously from 1 at t = 0.
GaussianForm quadratic_hamiltonian_kernel(const QuadraticGenerator& gen);

}  // namespace bargmann::transforms
