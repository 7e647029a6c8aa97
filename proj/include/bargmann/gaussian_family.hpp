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

#include "bargmann/gaussian_form.hpp"
#include "bargmann/gaussian_integral.hpp"

namespace bargmann::core {

/// A family of states f_α(ū) = c·exp(½zᵀAz + bᵀz) with
/// z = (α_1..α_p, ᾱ_1..ᾱ_p, ū_1..ū_n), Gaussian in the complex parameters as
/// well. Coherent states and the generalized Bell states are families of
/// this kind, which lets resolutions of the identity and outcome densities
/// be done as exact integrals over α.
class GaussianFamily {
 public:
  GaussianFamily(std::size_t n_params, std::size_t n_modes, CMatrix a, CVector b, cplx c,
                 bool delta_normalized = false);

  std::size_t n_params() const { return n_params_; }
  std::size_t n_modes() const { return n_modes_; }
  bool is_delta_normalized() const { return delta_normalized_; }
  const CMatrix& a() const { return a_; }
  const CVector& b() const { return b_; }
  cplx c() const { return c_; }

  /// The member state at parameter α.
  GaussianForm at(const CVector& alpha) const;

  /// scale·∫ |f_α⟩⟨f_α| dμ(α), dμ = ∏ d²α_k/π, as an operator kernel.
  GaussianForm resolution(cplx scale = 1.0) const;

  /// α ↦ (⟨f_α| ⊗ I)|F⟩ with f_α on the listed modes of F; the result lives
  /// on the remaining modes of F in their original order.
  GaussianFamily contract(const GaussianForm& f, std::span<const std::size_t> modes) const;

  /// α ↦ ⟨f_α|f_α⟩ as a Gaussian over (α, ᾱ).
  GaussianExpr norm_squared() const;

 private:
  std::size_t n_params_;
  std::size_t n_modes_;
  CMatrix a_;
  CVector b_;
  cplx c_;
  bool delta_normalized_;
};

}  // namespace bargmann::core
