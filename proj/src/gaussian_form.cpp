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

#include "bargmann/gaussian_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann::core {
namespace {

std::vector<std::size_t> range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

// ⟨f|g⟩ integrand over (u_1..u_n, ū_1..ū_n).
GaussianExpr overlap_integrand(const GaussianForm& f, const GaussianForm& g) {
  const std::size_t n = f.n_out();
  GaussianExpr e = GaussianExpr::zeros(2 * n, std::conj(f.c()) * g.c());
  e.add(f.a().conjugate(), f.b().conjugate(), range(0, n));
  e.add(g.a(), g.b(), range(n, n));
  for (std::size_t k = 0; k < n; ++k) e.add_coupling(k, n + k, -1.0);
  return e;
}

std::vector<VariablePair> overlap_pairs(std::size_t n) {
  std::vector<VariablePair> pairs(n);
  for (std::size_t k = 0; k < n; ++k) pairs[k] = {k, n + k};
  return pairs;
}

void require_state(const GaussianForm& f, const char* what) {
  if (!f.is_state())
    throw InvalidArgument(std::string(what) + ": expected a state (no input variables)");
}

// Delta bookkeeping for a freshly computed form.
bool result_is_delta(std::size_t n_in, std::size_t n_out, const CMatrix& a, const CVector& b,
                     bool operands_delta) {
  if (n_in > 0) return operands_delta;
  if (n_out == 0) return false;
  GaussianForm probe(0, n_out, a, b, 1.0, true);
  return !norm_converges(probe);
}

GaussianForm from_expr(std::size_t n_in, std::size_t n_out, const GaussianExpr& e,
                       bool operands_delta) {
  const bool delta = result_is_delta(n_in, n_out, e.q, e.l, operands_delta);
  return GaussianForm(n_in, n_out, e.q, e.l, e.c, delta);
}

}  // namespace

GaussianForm::GaussianForm(std::size_t n_in, std::size_t n_out, CMatrix a, CVector b, cplx c,
                           bool delta_normalized)
    : n_in_(n_in), n_out_(n_out), b_(std::move(b)), c_(c), delta_normalized_(delta_normalized) {
  const auto n = static_cast<Eigen::Index>(n_in + n_out);
  if (a.rows() != n || a.cols() != n || b_.size() != n)
    throw DimensionMismatch("GaussianForm: A must be " + std::to_string(n) + "x" +
                            std::to_string(n) + " and b of length " + std::to_string(n));
  if (!a.allFinite() || !b_.allFinite() || !std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw InvalidArgument("GaussianForm: non-finite coefficients");
  a_ = linalg::symmetrized(a);
  if (n_in_ == 0 && !delta_normalized_ && n_out_ > 0 && !norm_converges(*this))
    throw DivergentIntegral("GaussianForm: state is not normalizable; flag it delta_normalized");
}

GaussianForm GaussianForm::scalar(cplx c) { return GaussianForm(0, 0, CMatrix(0, 0), CVector(0), c); }

GaussianForm GaussianForm::vacuum(std::size_t n_modes) {
  const auto n = static_cast<Eigen::Index>(n_modes);
  return GaussianForm(0, n_modes, CMatrix::Zero(n, n), CVector::Zero(n), 1.0);
}

cplx GaussianForm::evaluate(const CVector& z) const {
  if (static_cast<std::size_t>(z.size()) != n_vars())
    throw DimensionMismatch("evaluate: wrong number of variables");
  const cplx quad = 0.5 * (z.transpose() * a_ * z).value();
  const cplx lin = (b_.array() * z.array()).sum();
  return c_ * std::exp(quad + lin);
}

GaussianForm GaussianForm::scaled(cplx factor) const {
  return GaussianForm(n_in_, n_out_, a_, b_, c_ * factor, delta_normalized_);
}

GaussianForm GaussianForm::with_delta_flag(bool delta_normalized) const {
  return GaussianForm(n_in_, n_out_, a_, b_, c_, delta_normalized);
}

GaussianForm identity_kernel(std::size_t n_modes) {
  if (n_modes == 0) throw InvalidArgument("identity_kernel: mode count must be at least 1");
  const auto n = static_cast<Eigen::Index>(n_modes);
  CMatrix a = CMatrix::Zero(2 * n, 2 * n);
  a.topRightCorner(n, n).setIdentity();
  a.bottomLeftCorner(n, n).setIdentity();
  return GaussianForm(n_modes, n_modes, a, CVector::Zero(2 * n), 1.0);
}

GaussianForm compose(const GaussianForm& k1, const GaussianForm& k2) {
  if (k1.n_in() != k2.n_out())
    throw DimensionMismatch("compose: K1 has " + std::to_string(k1.n_in()) +
                            " input modes but K2 has " + std::to_string(k2.n_out()) +
                            " output modes");
  const std::size_t n = k1.n_in();
  const std::size_t n_w = k2.n_in();
  const std::size_t n_u = k1.n_out();
  // Slots: v (n) | v̄ (n) | w (n_w) | ū (n_u)
  const auto v = range(0, n);
  const auto vbar = range(n, n);
  const auto w = range(2 * n, n_w);
  const auto u = range(2 * n + n_w, n_u);

  std::vector<std::size_t> k1_slots(v);
  k1_slots.insert(k1_slots.end(), u.begin(), u.end());
  std::vector<std::size_t> k2_slots(w);
  k2_slots.insert(k2_slots.end(), vbar.begin(), vbar.end());

  GaussianExpr e = GaussianExpr::zeros(2 * n + n_w + n_u, k1.c() * k2.c());
  e.add(k1.a(), k1.b(), k1_slots);
  e.add(k2.a(), k2.b(), k2_slots);
  std::vector<VariablePair> pairs(n);
  for (std::size_t j = 0; j < n; ++j) {
    e.add_coupling(v[j], vbar[j], -1.0);
    pairs[j] = {v[j], vbar[j]};
  }
  return from_expr(n_w, n_u, integrate(e, pairs),
                   k1.is_delta_normalized() || k2.is_delta_normalized());
}

GaussianForm apply(const GaussianForm& k, const GaussianForm& f) {
  require_state(f, "apply");
  return compose(k, f);
}

cplx inner_product(const GaussianForm& f, const GaussianForm& g) {
  require_state(f, "inner_product");
  require_state(g, "inner_product");
  if (f.n_out() != g.n_out()) throw DimensionMismatch("inner_product: mode counts differ");
  if (f.is_delta_normalized() && g.is_delta_normalized())
    throw DivergentIntegral("inner_product: both operands are delta-normalized");
  const auto pairs = overlap_pairs(f.n_out());
  return integrate(overlap_integrand(f, g), pairs).c;
}

double norm(const GaussianForm& f) {
  require_state(f, "norm");
  if (f.is_delta_normalized())
    throw DivergentIntegral("norm: delta-normalized forms have no norm");
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

GaussianForm adjoint(const GaussianForm& k) {
  const std::size_t n_in = k.n_in();
  const std::size_t n_out = k.n_out();
  // Old input v_i becomes new output slot n_out + i; old output ū_j becomes
  // new input slot j.
  std::vector<std::size_t> target(n_in + n_out);
  for (std::size_t i = 0; i < n_in; ++i) target[i] = n_out + i;
  for (std::size_t j = 0; j < n_out; ++j) target[n_in + j] = j;
  const auto n = static_cast<Eigen::Index>(n_in + n_out);
  CMatrix a(n, n);
  CVector b(n);
  for (std::size_t i = 0; i < target.size(); ++i) {
    b(target[i]) = std::conj(k.b()(i));
    for (std::size_t j = 0; j < target.size(); ++j) a(target[i], target[j]) = std::conj(k.a()(i, j));
  }
  return GaussianForm(n_out, n_in, a, b, std::conj(k.c()), k.is_delta_normalized());
}

GaussianForm tensor(const GaussianForm& f, const GaussianForm& g) {
  const std::size_t n_in = f.n_in() + g.n_in();
  const std::size_t n_out = f.n_out() + g.n_out();
  std::vector<std::size_t> f_slots = range(0, f.n_in());
  for (std::size_t j = 0; j < f.n_out(); ++j) f_slots.push_back(n_in + j);
  std::vector<std::size_t> g_slots = range(f.n_in(), g.n_in());
  for (std::size_t j = 0; j < g.n_out(); ++j) g_slots.push_back(n_in + f.n_out() + j);
  GaussianExpr e = GaussianExpr::zeros(n_in + n_out, f.c() * g.c());
  e.add(f.a(), f.b(), f_slots);
  e.add(g.a(), g.b(), g_slots);
  return GaussianForm(n_in, n_out, e.q, e.l, e.c,
                      f.is_delta_normalized() || g.is_delta_normalized());
}

GaussianForm partial_contract(const GaussianForm& f, std::span<const std::size_t> modes,
                              const GaussianForm& g) {
  require_state(f, "partial_contract");
  require_state(g, "partial_contract");
  const std::size_t n = f.n_out();
  const std::size_t k = modes.size();
  if (g.n_out() != k) throw DimensionMismatch("partial_contract: bra mode count mismatch");
  std::vector<char> seen(n, 0);
  for (std::size_t m : modes) {
    if (m >= n) throw DimensionMismatch("partial_contract: mode index out of range");
    if (seen[m]) throw InvalidArgument("partial_contract: repeated mode index");
    seen[m] = 1;
  }
  if (f.is_delta_normalized() && g.is_delta_normalized() && k == n)
    throw DivergentIntegral("partial_contract: both operands are delta-normalized");

  // Slots: ū of f (n) | u of the contracted modes (k)
  GaussianExpr e = GaussianExpr::zeros(n + k, f.c() * std::conj(g.c()));
  e.add(f.a(), f.b(), range(0, n));
  e.add(g.a().conjugate(), g.b().conjugate(), range(n, k));
  std::vector<VariablePair> pairs(k);
  for (std::size_t i = 0; i < k; ++i) {
    e.add_coupling(n + i, modes[i], -1.0);
    pairs[i] = {n + i, modes[i]};
  }
  return from_expr(0, n - k, integrate(e, pairs), false);
}

GaussianForm substitute_affine(const GaussianForm& f, const CMatrix& m, const CVector& shift) {
  require_state(f, "substitute_affine");
  if (static_cast<std::size_t>(m.rows()) != f.n_out() || shift.size() != m.rows())
    throw DimensionMismatch("substitute_affine: map does not match the state");
  const CMatrix a = m.transpose() * f.a() * m;
  const CVector as = f.a() * shift;
  const CVector b = m.transpose() * (as + f.b());
  const cplx c0 = 0.5 * (shift.array() * as.array()).sum() + (f.b().array() * shift.array()).sum();
  const auto n_out = static_cast<std::size_t>(m.cols());
  const bool delta = result_is_delta(0, n_out, a, b, f.is_delta_normalized());
  return GaussianForm(0, n_out, a, b, f.c() * std::exp(c0), delta);
}

bool norm_converges(const GaussianForm& state) {
  if (!state.is_state()) return false;
  const auto pairs = overlap_pairs(state.n_out());
  return integral_converges(overlap_integrand(state, state), pairs);
}

FormDistance distance(const GaussianForm& lhs, const GaussianForm& rhs) {
  if (lhs.n_in() != rhs.n_in() || lhs.n_out() != rhs.n_out())
    throw DimensionMismatch("distance: forms have different shapes");
  FormDistance d;
  d.a = linalg::max_abs(lhs.a() - rhs.a());
  d.b = lhs.b().size() == 0 ? 0.0 : (lhs.b() - rhs.b()).cwiseAbs().maxCoeff();
  d.c_modulus = std::abs(std::abs(lhs.c()) - std::abs(rhs.c()));
  d.c = std::abs(lhs.c() - rhs.c());
  return d;
}

LinearTimesGaussian apply_ladder(const GaussianForm& state, std::size_t mode, cplx c_a,
                                 cplx c_adag) {
  require_state(state, "apply_ladder");
  if (mode >= state.n_out()) throw DimensionMismatch("apply_ladder: mode out of range");
  // ∂/∂ū_k F = ((A ū)_k + b_k) F
  CVector slope = c_a * state.a().row(mode).transpose();
  slope(mode) += c_adag;
  return LinearTimesGaussian{slope, c_a * state.b()(mode), state};
}

cplx annihilation_expectation(const GaussianForm& state, std::size_t mode) {
  require_state(state, "annihilation_expectation");
  if (state.is_delta_normalized())
    throw DivergentIntegral("annihilation_expectation: delta-normalized state");
  if (mode >= state.n_out()) throw DimensionMismatch("annihilation_expectation: mode out of range");
  const std::size_t n = state.n_out();
  const auto pairs = overlap_pairs(n);
  const MomentResult m = integrate_with_moments(overlap_integrand(state, state), pairs);
  // ⟨ū_j⟩ sits at integrated position n + j.
  const CVector ubar_mean = m.mean.tail(n);
  return (state.a().row(mode) * ubar_mean).value() + state.b()(mode);
}

}  // namespace bargmann::core
