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

#include "bargmann/gaussian_family.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "bargmann/errors.hpp"

namespace bargmann::core {
namespace {

std::vector<std::size_t> range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

// Slots of the conjugated family: conj turns α into ᾱ and ū into u, so the
// α-block lands on the ᾱ slots and vice versa.
std::vector<std::size_t> conjugate_slots(std::size_t p, std::size_t n, std::size_t mode_first) {
  std::vector<std::size_t> slots = range(p, p);
  const auto alpha = range(0, p);
  slots.insert(slots.end(), alpha.begin(), alpha.end());
  const auto modes = range(mode_first, n);
  slots.insert(slots.end(), modes.begin(), modes.end());
  return slots;
}

}  // namespace

GaussianFamily::GaussianFamily(std::size_t n_params, std::size_t n_modes, CMatrix a, CVector b,
                               cplx c, bool delta_normalized)
    : n_params_(n_params), n_modes_(n_modes), b_(std::move(b)), c_(c),
      delta_normalized_(delta_normalized) {
  const auto n = static_cast<Eigen::Index>(2 * n_params + n_modes);
  if (a.rows() != n || a.cols() != n || b_.size() != n)
    throw DimensionMismatch("GaussianFamily: coefficient sizes do not match " +
                            std::to_string(n) + " variables");
  a_ = linalg::symmetrized(a);
}

GaussianForm GaussianFamily::at(const CVector& alpha) const {
  if (static_cast<std::size_t>(alpha.size()) != n_params_)
    throw DimensionMismatch("GaussianFamily::at: wrong parameter count");
  const auto p = static_cast<Eigen::Index>(2 * n_params_);
  const auto n = static_cast<Eigen::Index>(n_modes_);
  CVector s(p);
  s << alpha, alpha.conjugate();
  const CMatrix a_ss = a_.topLeftCorner(p, p);
  const CMatrix a_us = a_.bottomLeftCorner(n, p);
  const cplx exponent = 0.5 * (s.transpose() * a_ss * s).value() + (b_.head(p).array() * s.array()).sum();
  const CVector b = b_.tail(n) + a_us * s;
  return GaussianForm(0, n_modes_, a_.bottomRightCorner(n, n), b, c_ * std::exp(exponent),
                      delta_normalized_);
}

GaussianForm GaussianFamily::resolution(cplx scale) const {
  const std::size_t p = n_params_;
  const std::size_t n = n_modes_;
  // Slots: α (p) | ᾱ (p) | v (n) | ū (n)
  GaussianExpr e = GaussianExpr::zeros(2 * p + 2 * n, scale * std::norm(c_));
  std::vector<std::size_t> direct = range(0, 2 * p);
  for (std::size_t j = 0; j < n; ++j) direct.push_back(2 * p + n + j);
  e.add(a_, b_, direct);
  e.add(a_.conjugate(), b_.conjugate(), conjugate_slots(p, n, 2 * p));
  std::vector<VariablePair> pairs(p);
  for (std::size_t k = 0; k < p; ++k) pairs[k] = {k, p + k};
  const GaussianExpr r = integrate(e, pairs);
  return GaussianForm(n, n, r.q, r.l, r.c);
}

GaussianFamily GaussianFamily::contract(const GaussianForm& f,
                                        std::span<const std::size_t> modes) const {
  if (!f.is_state()) throw InvalidArgument("GaussianFamily::contract: expected a state");
  if (modes.size() != n_modes_)
    throw DimensionMismatch("GaussianFamily::contract: mode list does not match the family");
  const std::size_t p = n_params_;
  const std::size_t n = f.n_out();
  const std::size_t k = n_modes_;
  std::vector<char> seen(n, 0);
  for (std::size_t m : modes) {
    if (m >= n) throw DimensionMismatch("GaussianFamily::contract: mode out of range");
    if (seen[m]) throw InvalidArgument("GaussianFamily::contract: repeated mode");
    seen[m] = 1;
  }
  if (f.is_delta_normalized() && delta_normalized_ && k == n)
    throw DivergentIntegral("GaussianFamily::contract: both operands are delta-normalized");

  // Slots: α (p) | ᾱ (p) | ū of F (n) | u of the family modes (k)
  GaussianExpr e = GaussianExpr::zeros(2 * p + n + k, std::conj(c_) * f.c());
  e.add(f.a(), f.b(), range(2 * p, n));
  e.add(a_.conjugate(), b_.conjugate(), conjugate_slots(p, k, 2 * p + n));
  std::vector<VariablePair> pairs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t u = 2 * p + n + i;
    const std::size_t ubar = 2 * p + modes[i];
    e.add_coupling(u, ubar, -1.0);
    pairs[i] = {u, ubar};
  }
  const GaussianExpr r = integrate(e, pairs);
  return GaussianFamily(p, n - k, r.q, r.l, r.c, f.is_delta_normalized() && k < n);
}

GaussianExpr GaussianFamily::norm_squared() const {
  if (delta_normalized_) throw DivergentIntegral("GaussianFamily::norm_squared: delta-normalized family");
  const std::size_t p = n_params_;
  const std::size_t n = n_modes_;
  // Slots: α (p) | ᾱ (p) | ū (n) | u (n)
  GaussianExpr e = GaussianExpr::zeros(2 * p + 2 * n, std::norm(c_));
  e.add(a_, b_, range(0, 2 * p + n));
  e.add(a_.conjugate(), b_.conjugate(), conjugate_slots(p, n, 2 * p + n));
  std::vector<VariablePair> pairs(n);
  for (std::size_t j = 0; j < n; ++j) {
    e.add_coupling(2 * p + n + j, 2 * p + j, -1.0);
    pairs[j] = {2 * p + n + j, 2 * p + j};
  }
  return integrate(e, pairs);
}

}  // namespace bargmann::core
