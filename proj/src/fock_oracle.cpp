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

#include "bargmann/fock_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include <unsupported/Eigen/KroneckerProduct>

#include "bargmann/errors.hpp"

namespace bargmann::fock {
namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_cutoff(std::size_t cutoff) {
  if (cutoff < 1) throw InvalidArgument("Fock cutoff must be at least 1");
}

// Multi-index of a flat position, mode 0 first.
std::vector<std::size_t> unflatten(std::size_t flat, std::size_t modes, std::size_t cutoff) {
  std::vector<std::size_t> n(modes);
  for (std::size_t k = modes; k-- > 0;) {
    n[k] = flat % (cutoff + 1);
    flat /= cutoff + 1;
  }
  return n;
}

}  // namespace

FockTensor::FockTensor(std::size_t modes, std::size_t cutoff)
    : FockTensor(modes, cutoff, CVector::Zero(static_cast<Eigen::Index>(checked_pow(cutoff + 1, modes)))) {}

FockTensor::FockTensor(std::size_t modes, std::size_t cutoff, CVector data)
    : modes_(modes), cutoff_(cutoff), data_(std::move(data)) {
  require_cutoff(cutoff);
  if (static_cast<std::size_t>(data_.size()) != checked_pow(cutoff + 1, modes))
    throw DimensionMismatch("FockTensor: data length does not match (N+1)^m");
  if (!data_.allFinite()) throw NumericalFailure("FockTensor: non-finite coefficients");
}

std::size_t FockTensor::flat_index(const std::vector<std::size_t>& n) const {
  if (n.size() != modes_) throw DimensionMismatch("FockTensor: wrong index arity");
  std::size_t flat = 0;
  for (std::size_t k : n) {
    if (k > cutoff_) throw DimensionMismatch("FockTensor: photon number beyond cutoff");
    flat = flat * (cutoff_ + 1) + k;
  }
  return flat;
}

OracleOptions OracleOptions::from_environment() {
  OracleOptions o;
  const char* env = std::getenv("BARGMANN_STRICT");
  o.strict = env != nullptr && std::strcmp(env, "1") == 0;
  return o;
}

std::size_t required_cutoff(double alpha_abs, double gamma_abs, double g) {
  const double s = alpha_abs + gamma_abs;
  const double need = std::ceil(10.0 * s * s + 10.0 * std::exp(2.0 * g));
  return std::max<std::size_t>(20, static_cast<std::size_t>(need));
}

void check_cutoff(std::size_t cutoff, std::size_t required, const OracleOptions& options) {
  if (cutoff >= required) return;
  const std::string msg = "Fock cutoff " + std::to_string(cutoff) +
                          " is below the selection rule value " + std::to_string(required);
  if (options.strict) throw CutoffError(msg);
  if (options.warn) options.warn(msg);
  else std::cerr << "warning: " << msg << "\n";
}

Ladder ladder_matrices(std::size_t cutoff) {
  require_cutoff(cutoff);
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  CMatrix a = CMatrix::Zero(d, d);
  for (Eigen::Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {a, a.adjoint()};
}

CMatrix on_mode(const CMatrix& op, std::size_t mode, std::size_t modes) {
  if (mode >= modes) throw DimensionMismatch("on_mode: mode out of range");
  const auto d = op.rows();
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t k = 0; k < modes; ++k) {
    const CMatrix factor = k == mode ? op : CMatrix::Identity(d, d);
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

CMatrix fock_displacement(cplx alpha, std::size_t cutoff) {
  const Ladder l = ladder_matrices(cutoff);
  return linalg::expm(alpha * l.adag - std::conj(alpha) * l.a);
}

CMatrix fock_squeezer(double g, std::size_t cutoff) {
  const Ladder l = ladder_matrices(cutoff);
  return linalg::expm(0.5 * g * (l.adag * l.adag - l.a * l.a));
}

CMatrix fock_beam_splitter(double theta, std::size_t cutoff) {
  require_cutoff(cutoff);
  const std::size_t d = cutoff + 1;
  const auto dim = static_cast<Eigen::Index>(d * d);
  CMatrix u = CMatrix::Zero(dim, dim);
  // i·H_bs = −θ(a₁†a₂ − a₁a₂†) keeps n₁ + n₂ fixed.
  for (std::size_t total = 0; total <= 2 * cutoff; ++total) {
    std::vector<std::size_t> n1s;
    for (std::size_t n1 = 0; n1 <= cutoff; ++n1)
      if (total >= n1 && total - n1 <= cutoff) n1s.push_back(n1);
    const auto s = static_cast<Eigen::Index>(n1s.size());
    CMatrix gen = CMatrix::Zero(s, s);
    for (Eigen::Index i = 0; i < s; ++i) {
      const double n1 = static_cast<double>(n1s[i]);
      const double n2 = static_cast<double>(total - n1s[i]);
      // a₁†a₂|n₁,n₂⟩ = √((n₁+1)n₂)|n₁+1,n₂−1⟩, which is the next entry.
      if (i + 1 < s) {
        const double amp = std::sqrt((n1 + 1.0) * n2);
        gen(i + 1, i) += -theta * amp;
        gen(i, i + 1) += theta * amp;
      }
    }
    const CMatrix block = linalg::expm(gen);
    for (Eigen::Index i = 0; i < s; ++i)
      for (Eigen::Index j = 0; j < s; ++j)
        u(n1s[i] * d + (total - n1s[i]), n1s[j] * d + (total - n1s[j])) = block(i, j);
  }
  return u;
}

CMatrix fock_linear_hamiltonian(const CVector& f, double t, std::size_t cutoff) {
  const Ladder l = ladder_matrices(cutoff);
  const auto modes = static_cast<std::size_t>(f.size());
  const auto dim = static_cast<Eigen::Index>(checked_pow(cutoff + 1, modes));
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < modes; ++j)
    h += std::conj(f(j)) * on_mode(l.a, j, modes) + f(j) * on_mode(l.adag, j, modes);
  return linalg::expm(kI * t * h);
}

CMatrix fock_quadratic_generator(const CMatrix& b, const CMatrix& c, std::size_t cutoff) {
  const Ladder l = ladder_matrices(cutoff);
  const auto modes = static_cast<std::size_t>(b.rows());
  std::vector<CMatrix> a(modes);
  std::vector<CMatrix> ad(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    a[j] = on_mode(l.a, j, modes);
    ad[j] = on_mode(l.adag, j, modes);
  }
  const auto dim = a[0].rows();
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < modes; ++j)
    for (std::size_t k = 0; k < modes; ++k)
      h += 0.5 * (b(j, k) * ad[j] * ad[k] + std::conj(b(j, k)) * a[j] * a[k]) +
           c(j, k) * ad[j] * a[k];
  return h;
}

CMatrix fock_quadratic_hamiltonian(const transforms::QuadraticGenerator& gen, std::size_t cutoff) {
  gen.validate();
  return linalg::expm(kI * gen.t * fock_quadratic_generator(gen.b, gen.c, cutoff));
}

SparseCMatrix sparse_quadratic_generator(const CMatrix& b, const CMatrix& c, std::size_t cutoff) {
  require_cutoff(cutoff);
  const auto modes = static_cast<std::size_t>(b.rows());
  if (b.cols() != b.rows() || c.rows() != b.rows() || c.cols() != b.rows())
    throw DimensionMismatch("sparse_quadratic_generator: B and C must be m×m");
  const std::size_t dim = checked_pow(cutoff + 1, modes);
  std::vector<std::size_t> stride(modes, 1);
  for (std::size_t k = modes; k-- > 1;) stride[k - 1] = stride[k] * (cutoff + 1);
  std::vector<Eigen::Triplet<cplx>> entries;
  for (std::size_t col = 0; col < dim; ++col) {
    const auto n = unflatten(col, modes, cutoff);
    // Apply a_k (or a_k†) then a_j (or a_j†); returns false when it leaves the space.
    auto hop = [&](std::vector<long>& m, std::size_t mode, int dir, double& amp) {
      if (dir < 0) {
        if (m[mode] == 0) return false;
        amp *= std::sqrt(static_cast<double>(m[mode]));
        m[mode] -= 1;
      } else {
        if (m[mode] >= static_cast<long>(cutoff)) return false;
        m[mode] += 1;
        amp *= std::sqrt(static_cast<double>(m[mode]));
      }
      return true;
    };
    auto add = [&](std::size_t j, int dj, std::size_t k, int dk, cplx coeff) {
      if (coeff == cplx(0.0)) return;
      std::vector<long> m(n.begin(), n.end());
      double amp = 1.0;
      if (!hop(m, k, dk, amp) || !hop(m, j, dj, amp)) return;
      std::size_t row = 0;
      for (std::size_t q = 0; q < modes; ++q) row += static_cast<std::size_t>(m[q]) * stride[q];
      entries.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), coeff * amp);
    };
    for (std::size_t j = 0; j < modes; ++j)
      for (std::size_t k = 0; k < modes; ++k) {
        add(j, +1, k, +1, 0.5 * b(j, k));
        add(j, -1, k, -1, 0.5 * std::conj(b(j, k)));
        add(j, +1, k, -1, c(j, k));
      }
  }
  SparseCMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

CVector expm_action(const SparseCMatrix& h, cplx factor, const CVector& v) {
  if (h.rows() != h.cols() || h.cols() != v.size())
    throw DimensionMismatch("expm_action: operator and vector sizes differ");
  double norm1 = 0.0;
  for (Eigen::Index k = 0; k < h.outerSize(); ++k) {
    double col = 0.0;
    for (SparseCMatrix::InnerIterator it(h, k); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  // Each step has |step·h| ≤ 1 so the Taylor terms shrink from the start.
  const auto steps = std::max<long>(1, static_cast<long>(std::ceil(std::abs(factor) * norm1)));
  const cplx step = factor / static_cast<double>(steps);
  CVector out = v;
  for (long s = 0; s < steps; ++s) {
    CVector term = out;
    CVector sum = out;
    for (int k = 1; k < 200; ++k) {
      term = (step / static_cast<double>(k)) * (h * term);
      sum += term;
      if (term.norm() <= 1e-17 * sum.norm()) break;
    }
    out = sum;
  }
  if (!out.allFinite()) throw NumericalFailure("expm_action: non-finite result");
  return out;
}

CVector fock_apply_quadratic(const transforms::QuadraticGenerator& gen, std::size_t cutoff,
                             const CVector& v) {
  gen.validate();
  return expm_action(sparse_quadratic_generator(gen.b, gen.c, cutoff), kI * gen.t, v);
}

CVector fock_coherent(cplx alpha, std::size_t cutoff) {
  require_cutoff(cutoff);
  CVector v(static_cast<Eigen::Index>(cutoff + 1));
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 1; n <= cutoff; ++n)
    v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return v;
}

double truncation_leakage(const CMatrix& u, std::size_t modes, std::size_t cutoff) {
  const std::size_t dim = checked_pow(cutoff + 1, modes);
  if (static_cast<std::size_t>(u.rows()) != dim || u.cols() != u.rows())
    throw DimensionMismatch("truncation_leakage: matrix does not match the truncated space");
  std::vector<Eigen::Index> low;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto n = unflatten(i, modes, cutoff);
    bool keep = true;
    for (std::size_t k : n) keep = keep && 2 * k <= cutoff;
    if (keep) low.push_back(static_cast<Eigen::Index>(i));
  }
  const CMatrix g = u.adjoint() * u;
  double worst = 0.0;
  for (Eigen::Index i : low)
    for (Eigen::Index j : low) {
      const cplx target = i == j ? cplx(1.0) : cplx(0.0);
      worst = std::max(worst, std::abs(g(i, j) - target));
    }
  return worst;
}

FockTensor expand_to_fock(const core::GaussianForm& f, std::size_t cutoff) {
  if (!f.is_state()) throw InvalidArgument("expand_to_fock: expected a state");
  const std::size_t m = f.n_out();
  if (m > 3) throw InvalidArgument("expand_to_fock: at most 3 modes");
  FockTensor out(m, cutoff);
  CVector& psi = out.data();
  std::vector<std::size_t> stride(m);
  for (std::size_t k = m; k-- > 0;) stride[k] = k + 1 == m ? 1 : stride[k + 1] * (cutoff + 1);
  psi(0) = f.c();
  // ψ[n+e_k] = (b_k ψ[n] + Σ_j A_kj √n_j ψ[n−e_j]) / √(n_k+1), generated
  // from the first non-zero index so each entry has one predecessor.
  for (std::size_t flat = 1; flat < out.dim(); ++flat) {
    auto n = unflatten(flat, m, cutoff);
    std::size_t k = 0;
    while (n[k] == 0) ++k;
    n[k] -= 1;
    const std::size_t base = flat - stride[k];
    cplx acc = f.b()(k) * psi(base);
    for (std::size_t j = 0; j < m; ++j)
      if (n[j] > 0) acc += f.a()(k, j) * std::sqrt(static_cast<double>(n[j])) * psi(base - stride[j]);
    psi(flat) = acc / std::sqrt(static_cast<double>(n[k] + 1));
  }
  return out;
}

FockTensor state_to_fock(const core::GaussianForm& f, std::size_t cutoff, double max_tail) {
  if (f.is_delta_normalized())
    throw DivergentIntegral("state_to_fock: delta-normalized forms have no finite norm");
  FockTensor out = expand_to_fock(f, cutoff);
  const double total = f.n_out() == 0 ? std::norm(f.c()) : std::pow(core::norm(f), 2);
  const double tail = total - out.data().squaredNorm();
  if (tail > max_tail)
    throw CutoffError("state_to_fock: mass " + std::to_string(tail) + " beyond cutoff " +
                      std::to_string(cutoff));
  return out;
}

double oracle_teleport_cv(cplx gamma, cplx alpha, double q, std::size_t cutoff,
                          const OracleOptions& options) {
  if (!(q >= 0.0 && q < 1.0)) throw InvalidArgument("oracle_teleport_cv: q must lie in [0, 1)");
  check_cutoff(cutoff, required_cutoff(std::abs(alpha), std::abs(gamma), std::atanh(q)), options);
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  CVector vacuum = CVector::Zero(d);
  vacuum(0) = 1.0;
  const CVector g = fock_displacement(gamma, cutoff) * vacuum;
  const CMatrix da = fock_displacement(alpha, cutoff);
  CVector w = da.adjoint() * g;
  double qn = 1.0;
  for (Eigen::Index n = 0; n < d; ++n, qn *= q) w(n) *= qn;
  const CVector phi = da * w;
  return std::abs(g.dot(phi));
}

}  // namespace bargmann::fock
