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
#include <span>
#include <vector>

#include "bargmann/gaussian_integral.hpp"
#include "bargmann/linalg.hpp"

namespace bargmann::core {

/// c·exp(½ zᵀAz + bᵀz) with z = (v_1..v_{n_in}, ū_1..ū_{n_out}).
///
/// The v-block holds the holomorphic input variables of an operator kernel
/// K(ū, v); the ū-block holds the output variables. A form with n_in = 0
/// is a state f(ū) in the holomorphic (Bargmann) representation, and a form
/// with no variables at all is a plain scalar.
///
/// A is stored symmetrized. Forms flagged delta_normalized are generalized
/// vectors (quadrature eigenstates, the ideal Bell family); they may be
/// contracted against ordinary states but never normed. An unflagged state
/// must have a convergent norm integral, which the constructor verifies.
class GaussianForm {
 public:
  GaussianForm(std::size_t n_in, std::size_t n_out, CMatrix a, CVector b, cplx c,
               bool delta_normalized = false);

  /// The constant c as a form with no variables.
  static GaussianForm scalar(cplx c);
  /// The n-mode vacuum state, f(ū) = 1.
  static GaussianForm vacuum(std::size_t n_modes);

  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return n_out_; }
  std::size_t n_vars() const { return n_in_ + n_out_; }
  bool is_state() const { return n_in_ == 0; }
  bool is_delta_normalized() const { return delta_normalized_; }

  const CMatrix& a() const { return a_; }
  const CVector& b() const { return b_; }
  cplx c() const { return c_; }

  // Blocks of A against the (v, ū) ordering.
  CMatrix in_in() const { return a_.topLeftCorner(n_in_, n_in_); }
  CMatrix in_out() const { return a_.topRightCorner(n_in_, n_out_); }
  CMatrix out_in() const { return a_.bottomLeftCorner(n_out_, n_in_); }
  CMatrix out_out() const { return a_.bottomRightCorner(n_out_, n_out_); }
  CVector b_in() const { return b_.head(n_in_); }
  CVector b_out() const { return b_.tail(n_out_); }

  /// Pointwise value at z = (v, ū).
  cplx evaluate(const CVector& z) const;

  GaussianExpr expr() const { return GaussianExpr{a_, b_, c_}; }

  GaussianForm scaled(cplx factor) const;
  GaussianForm with_delta_flag(bool delta_normalized) const;

 private:
  std::size_t n_in_;
  std::size_t n_out_;
  CMatrix a_;
  CVector b_;
  cplx c_;
  bool delta_normalized_;
};

/// Kernel e^{ū·v} of the identity on n modes.
GaussianForm identity_kernel(std::size_t n_modes);

/// Kernel of K1·K2: ∫ K1(ū,v) K2(v̄,w) ∏ e^{-v̄_j v_j} dv̄_j dv_j/(2πi).
GaussianForm compose(const GaussianForm& k1, const GaussianForm& k2);

/// (K f)(ū) for a state f.
GaussianForm apply(const GaussianForm& k, const GaussianForm& f);

/// ⟨f|g⟩ = ∫ conj(f(ū)) g(ū) e^{-ū·u}; conjugate-linear in f.
cplx inner_product(const GaussianForm& f, const GaussianForm& g);

double norm(const GaussianForm& f);

/// K†(ū, v) = conj(K(v̄, u)): conjugated coefficients with roles exchanged.
GaussianForm adjoint(const GaussianForm& k);

/// F ⊗ G; input and output modes of F come first in their blocks.
GaussianForm tensor(const GaussianForm& f, const GaussianForm& g);

/// (⟨g| ⊗ I)|f⟩ where g lives on the listed modes of f (in that order).
/// The result is a state on the remaining modes, in their original order.
GaussianForm partial_contract(const GaussianForm& f, std::span<const std::size_t> modes,
                              const GaussianForm& g);

/// State ū ↦ f(M ū + s) on M.cols() modes.
GaussianForm substitute_affine(const GaussianForm& f, const CMatrix& m, const CVector& shift);

/// True when ⟨f|f⟩ is an absolutely convergent Gaussian integral.
bool norm_converges(const GaussianForm& state);

/// Entrywise distances between two forms of equal shape.
struct FormDistance {
  double a = 0.0;         // max |ΔA|
  double b = 0.0;         // max |Δb|
  double c_modulus = 0.0; // ||c1| - |c2||
  double c = 0.0;         // |c1 - c2|
};
FormDistance distance(const GaussianForm& lhs, const GaussianForm& rhs);

/// (pᵀū + p0)·F: what a linear combination of ladder operators makes of a
/// Gaussian state.
struct LinearTimesGaussian {
  CVector slope;
  cplx offset;
  GaussianForm base;

  /// Non-zero slope means the operator does not act as a scalar on base.
  bool is_multiple_of_base(double tol) const { return slope.cwiseAbs().maxCoeff() <= tol; }
};

/// (c_a·a_k + c_adag·a_k†) F with a_k = ∂/∂ū_k and a_k† = ū_k.
LinearTimesGaussian apply_ladder(const GaussianForm& state, std::size_t mode, cplx c_a,
                                 cplx c_adag);

/// ⟨F|a_k|F⟩ / ⟨F|F⟩ for a normalizable state.
cplx annihilation_expectation(const GaussianForm& state, std::size_t mode);

}  // namespace bargmann::core
