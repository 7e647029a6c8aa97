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

#include "bargmann/linalg.hpp"

namespace bargmann::core {

/// c * exp(½ xᵀQx + lᵀx) over an ordered list of complex variables x.
///
/// Holomorphic and anti-holomorphic coordinates are independent entries of
/// x; integration pairs them up explicitly.
struct GaussianExpr {
  CMatrix q;
  CVector l;
  cplx c{1.0, 0.0};

  static GaussianExpr zeros(std::size_t n_vars, cplx c = 1.0);
  std::size_t size() const { return static_cast<std::size_t>(l.size()); }

  /// Adds a quadratic block and linear part on the listed variable slots.
  void add(const CMatrix& block, const CVector& linear, std::span<const std::size_t> slots);
  void add_coupling(std::size_t i, std::size_t j, cplx coefficient);
};

/// One complex integration variable w = x + iy: the slot holding w and the
/// slot holding w̄. The measure is dw̄dw/(2πi) = dxdy/π.
struct VariablePair {
  std::size_t holo;
  std::size_t anti;
};

/// Decay margin and conditioning thresholds of the Gaussian integral.
inline constexpr double kDecayTolerance = 1e-12;
inline constexpr double kConditionLimit = 1e12;

/// True when the integrand decays in every real direction of the
/// integrated variables, i.e. its real quadratic form is negative definite.
bool integral_converges(const GaussianExpr& e, std::span<const VariablePair> pairs);

/// Exact Gaussian integral over the listed pairs. The remaining variables
/// keep their relative order. Throws DivergentIntegral when the integrand
/// does not decay and SingularBlock when the contracted block is singular.
GaussianExpr integrate(const GaussianExpr& e, std::span<const VariablePair> pairs);

/// Full integral together with normalized first moments ∫x_k·e / ∫e for
/// each integrated coordinate, ordered (holo_1..holo_m, anti_1..anti_m).
struct MomentResult {
  cplx value;
  CVector mean;
};
MomentResult integrate_with_moments(const GaussianExpr& e, std::span<const VariablePair> pairs);

}  // namespace bargmann::core
