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

#include "bargmann/gaussian_integral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann::core {
namespace {

struct Partition {
  std::vector<std::size_t> integrated;  // holo slots, then anti slots
  std::vector<std::size_t> kept;
};

Partition partition(std::size_t n_vars, std::span<const VariablePair> pairs) {
  std::vector<char> used(n_vars, 0);
  Partition p;
  p.integrated.resize(2 * pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (std::size_t slot : {pairs[k].holo, pairs[k].anti}) {
      if (slot >= n_vars) throw DimensionMismatch("integration slot out of range");
      if (used[slot]) throw InvalidArgument("integration slot used twice");
      used[slot] = 1;
    }
    p.integrated[k] = pairs[k].holo;
    p.integrated[pairs.size() + k] = pairs[k].anti;
  }
  for (std::size_t i = 0; i < n_vars; ++i)
    if (!used[i]) p.kept.push_back(i);
  return p;
}

CMatrix gather(const CMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  CMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

CVector gather(const CVector& v, const std::vector<std::size_t>& idx) {
  CVector out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out(i) = v(idx[i]);
  return out;
}

// Map (w, w̄) = T (x, y) with w = x + iy.
CMatrix real_coordinates(std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m);
  CMatrix t = CMatrix::Zero(2 * n, 2 * n);
  t.topLeftCorner(n, n).setIdentity();
  t.topRightCorner(n, n) = kI * CMatrix::Identity(n, n);
  t.bottomLeftCorner(n, n).setIdentity();
  t.bottomRightCorner(n, n) = -kI * CMatrix::Identity(n, n);
  return t;
}

// Negated quadratic block in real coordinates: the integrand is
// exp(-½ rᵀ S r + ...).
CMatrix real_precision(const CMatrix& contracted) {
  const CMatrix t = real_coordinates(static_cast<std::size_t>(contracted.rows() / 2));
  return t.transpose() * contracted * t;
}

bool decays(const CMatrix& s) {
  if (s.size() == 0) return true;
  const RMatrix re = (s.real() + s.real().transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(re, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, linalg::max_abs(s));
  return es.eigenvalues().minCoeff() > kDecayTolerance * scale;
}

struct Contracted {
  Partition part;
  CMatrix contracted;  // -Q restricted to the integrated slots
  Eigen::PartialPivLU<CMatrix> lu;
  cplx prefactor;
};

Contracted contract(const GaussianExpr& e, std::span<const VariablePair> pairs) {
  if (e.q.rows() != e.q.cols() || static_cast<std::size_t>(e.q.rows()) != e.size())
    throw DimensionMismatch("Gaussian expression has inconsistent shapes");
  Contracted out{partition(e.size(), pairs), {}, {}, 1.0};
  out.contracted = -gather(e.q, out.part.integrated, out.part.integrated);
  if (pairs.empty()) return out;

  const CMatrix s = real_precision(out.contracted);
  if (!decays(s))
    throw DivergentIntegral("Gaussian integral diverges: integrand does not decay over " +
                            std::to_string(pairs.size()) + " integrated mode(s)");
  const double cond = linalg::condition_number(out.contracted);
  if (!(cond < kConditionLimit))
    throw SingularBlock("contracted Gaussian block is singular (condition " + std::to_string(cond) +
                        ")");
  out.lu = out.contracted.partialPivLu();

  // ∫ exp(-½ rᵀSr) d^{2m}r / π^m = 2^m ∏ λ_k^{-1/2}; Re S > 0 keeps every
  // eigenvalue in the right half plane, so principal roots are continuous.
  Eigen::ComplexEigenSolver<CMatrix> ces(s, false);
  if (ces.info() != Eigen::Success) throw NumericalFailure("eigenvalue solver failed");
  cplx pref = std::ldexp(1.0, static_cast<int>(pairs.size()));
  for (Eigen::Index k = 0; k < ces.eigenvalues().size(); ++k)
    pref /= std::sqrt(ces.eigenvalues()(k));
  out.prefactor = pref;
  return out;
}

}  // namespace

GaussianExpr GaussianExpr::zeros(std::size_t n_vars, cplx c) {
  const auto n = static_cast<Eigen::Index>(n_vars);
  return GaussianExpr{CMatrix::Zero(n, n), CVector::Zero(n), c};
}

void GaussianExpr::add(const CMatrix& block, const CVector& linear,
                       std::span<const std::size_t> slots) {
  if (static_cast<std::size_t>(block.rows()) != slots.size() ||
      static_cast<std::size_t>(linear.size()) != slots.size())
    throw DimensionMismatch("block does not match slot list");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    l(slots[i]) += linear(i);
    for (std::size_t j = 0; j < slots.size(); ++j) q(slots[i], slots[j]) += block(i, j);
  }
}

void GaussianExpr::add_coupling(std::size_t i, std::size_t j, cplx coefficient) {
  // coefficient * x_i x_j in the exponent
  if (i == j) {
    q(i, i) += 2.0 * coefficient;
  } else {
    q(i, j) += coefficient;
    q(j, i) += coefficient;
  }
}

bool integral_converges(const GaussianExpr& e, std::span<const VariablePair> pairs) {
  const Partition p = partition(e.size(), pairs);
  if (pairs.empty()) return true;
  return decays(real_precision(-gather(e.q, p.integrated, p.integrated)));
}

GaussianExpr integrate(const GaussianExpr& e, std::span<const VariablePair> pairs) {
  const Contracted k = contract(e, pairs);
  const auto& part = k.part;
  const CMatrix q_kk = gather(e.q, part.kept, part.kept);
  const CVector l_k = gather(e.l, part.kept);
  if (pairs.empty()) return GaussianExpr{q_kk, l_k, e.c};

  const CMatrix q_ik = gather(e.q, part.integrated, part.kept);
  const CVector l_i = gather(e.l, part.integrated);
  const CMatrix inv_q = k.lu.solve(q_ik);
  const CVector inv_l = k.lu.solve(l_i);

  GaussianExpr out;
  out.q = linalg::symmetrized(q_kk + q_ik.transpose() * inv_q);
  out.l = l_k + q_ik.transpose() * inv_l;
  out.c = e.c * k.prefactor * std::exp(0.5 * (l_i.array() * inv_l.array()).sum());
  return out;
}

MomentResult integrate_with_moments(const GaussianExpr& e, std::span<const VariablePair> pairs) {
  if (2 * pairs.size() != e.size())
    throw DimensionMismatch("moments require integrating every variable");
  const Contracted k = contract(e, pairs);
  if (pairs.empty()) return {e.c, CVector()};
  const CVector l_i = gather(e.l, k.part.integrated);
  const CVector mean = k.lu.solve(l_i);
  const cplx value = e.c * k.prefactor * std::exp(0.5 * (l_i.array() * mean.array()).sum());
  return {value, mean};
}

}  // namespace bargmann::core
