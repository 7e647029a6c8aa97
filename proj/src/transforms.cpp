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

#include "bargmann/transforms.hpp"

#include <cmath>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann::transforms {
namespace {

void require_square_pair(const CMatrix& phi, const CMatrix& psi) {
  if (phi.rows() != phi.cols() || psi.rows() != psi.cols() || phi.rows() != psi.rows())
    throw DimensionMismatch("symplectic pair: Φ and Ψ must be square of equal order");
}

// Bogoliubov kernel blocks against z = (v, ū); c is left to the caller.
GaussianForm kernel_blocks(const SymplecticPair& s, cplx c) {
  const auto n = s.phi.rows();
  if (linalg::condition_number(s.phi) >= core::kConditionLimit)
    throw SingularBlock("bogoliubov kernel: Φ is singular");
  const CMatrix phi_inv = s.phi.inverse();
  CMatrix a(2 * n, 2 * n);
  a.topLeftCorner(n, n) = s.psi.conjugate() * phi_inv;
  a.bottomLeftCorner(n, n) = phi_inv;
  a.topRightCorner(n, n) = phi_inv.transpose();
  a.bottomRightCorner(n, n) = -phi_inv * s.psi;
  return GaussianForm(n, n, a, CVector::Zero(2 * n), c);
}

}  // namespace

SymplecticPair SymplecticPair::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return {CMatrix::Identity(k, k), CMatrix::Zero(k, k)};
}

CMatrix SymplecticPair::block() const {
  const auto n = phi.rows();
  CMatrix m(2 * n, 2 * n);
  m << phi, psi, psi.conjugate(), phi.conjugate();
  return m;
}

SymplecticPair SymplecticPair::from_block(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw DimensionMismatch("from_block: expected a square matrix of even order");
  const auto n = m.rows() / 2;
  return {m.topLeftCorner(n, n), m.topRightCorner(n, n)};
}

SymplecticPair operator*(const SymplecticPair& lhs, const SymplecticPair& rhs) {
  if (lhs.size() != rhs.size()) throw DimensionMismatch("pair product: orders differ");
  return {lhs.phi * rhs.phi + lhs.psi * rhs.psi.conjugate(),
          lhs.phi * rhs.psi + lhs.psi * rhs.phi.conjugate()};
}

SymplecticReport check_symplectic(const CMatrix& phi, const CMatrix& psi) {
  require_square_pair(phi, psi);
  const auto n = phi.rows();
  SymplecticReport r;
  r.symmetry_residual = linalg::max_abs(phi * psi.transpose() - psi * phi.transpose());
  r.unitarity_residual =
      linalg::max_abs(phi * phi.adjoint() - psi * psi.adjoint() - CMatrix::Identity(n, n));
  return r;
}

void require_symplectic(const SymplecticPair& s, double tol) {
  const SymplecticReport r = check_symplectic(s.phi, s.psi);
  if (r.symmetry_residual > tol)
    throw ConstraintViolation("ΦΨᵀ − ΨΦᵀ = 0 violated (residual " +
                              std::to_string(r.symmetry_residual) + ")");
  if (r.unitarity_residual > tol)
    throw ConstraintViolation("ΦΦ† − ΨΨ† = I violated (residual " +
                              std::to_string(r.unitarity_residual) + ")");
}

CMatrix QuadraticGenerator::evolution_matrix() const {
  const auto n = b.rows();
  CMatrix m(2 * n, 2 * n);
  m << -c, -b, b.conjugate(), c.conjugate();
  return m;
}

void QuadraticGenerator::validate() const {
  if (b.rows() != b.cols() || c.rows() != c.cols() || b.rows() != c.rows() || b.rows() == 0)
    throw DimensionMismatch("quadratic generator: B and C must be square of equal order");
  if (!std::isfinite(t)) throw InvalidArgument("quadratic generator: t must be finite");
  if (linalg::max_abs(b - b.transpose()) > kGeneratorTolerance)
    throw ConstraintViolation("quadratic generator: B must be symmetric");
  if (linalg::max_abs(c - c.adjoint()) > kGeneratorTolerance)
    throw ConstraintViolation("quadratic generator: C must be Hermitian");
}

SymplecticPair bogoliubov_from_generator(const QuadraticGenerator& gen) {
  gen.validate();
  const SymplecticPair s =
      SymplecticPair::from_block(linalg::expm(kI * gen.t * gen.evolution_matrix()));
  const SymplecticReport r = check_symplectic(s.phi, s.psi);
  if (!r.ok(kExtractedTolerance))
    throw NumericalFailure("matrix exponential produced a pair off the constraint surface");
  return s;
}

GaussianForm inhomogeneous_kernel(const CVector& f) {
  const auto n = f.size();
  if (n == 0) throw InvalidArgument("inhomogeneous_kernel: empty shift");
  if (!f.allFinite()) throw InvalidArgument("inhomogeneous_kernel: non-finite shift");
  CMatrix a = CMatrix::Zero(2 * n, 2 * n);
  a.topRightCorner(n, n).setIdentity();
  a.bottomLeftCorner(n, n).setIdentity();
  CVector b(2 * n);
  b << f.conjugate(), -f;
  return GaussianForm(n, n, a, b, std::exp(-0.5 * f.squaredNorm()));
}

GaussianForm bogoliubov_kernel(const SymplecticPair& s) {
  require_symplectic(s);
  const cplx det = (s.phi * s.phi.adjoint()).determinant();
  return kernel_blocks(s, std::pow(det.real(), -0.25));
}

GaussianForm linear_hamiltonian_kernel(const CVector& f, double t) {
  const auto n = f.size();
  if (n == 0) throw InvalidArgument("linear_hamiltonian_kernel: empty coefficient vector");
  if (!f.allFinite() || !std::isfinite(t))
    throw InvalidArgument("linear_hamiltonian_kernel: non-finite input");
  CMatrix a = CMatrix::Zero(2 * n, 2 * n);
  a.topRightCorner(n, n).setIdentity();
  a.bottomLeftCorner(n, n).setIdentity();
  CVector b(2 * n);
  b << kI * t * f.conjugate(), kI * t * f;
  return GaussianForm(n, n, a, b, std::exp(-0.5 * t * t * f.squaredNorm()));
}

GaussianForm quadratic_hamiltonian_kernel(const QuadraticGenerator& gen) {
  gen.validate();
  const CMatrix gen_matrix = gen.evolution_matrix();
  // Walk t in steps short enough that det(Φe^{itC}) cannot wind past the
  // branch cut between samples; keep the root nearest the previous one.
  const double scale = std::abs(gen.t) * gen_matrix.cwiseAbs().colwise().sum().maxCoeff();
  const int steps = std::max(1, static_cast<int>(std::ceil(scale)));
  cplx root = 1.0;
  SymplecticPair s = SymplecticPair::identity(gen.b.rows());
  for (int k = 1; k <= steps; ++k) {
    const double tk = gen.t * k / steps;
    s = SymplecticPair::from_block(linalg::expm(kI * tk * gen_matrix));
    const cplx det = (s.phi * linalg::expm(kI * tk * gen.c)).determinant();
    const cplx r = std::sqrt(det);
    root = std::abs(r - root) <= std::abs(-r - root) ? r : -r;
  }
  if (!check_symplectic(s.phi, s.psi).ok(kExtractedTolerance))
    throw NumericalFailure("matrix exponential produced a pair off the constraint surface");
  return kernel_blocks(s, 1.0 / root);
}

}  // namespace bargmann::transforms
