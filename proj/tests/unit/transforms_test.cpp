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

#include <cmath>

#include <gtest/gtest.h>

#include "bargmann/devices.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/fock_oracle.hpp"
#include "bargmann/transforms.hpp"
#include "../support.hpp"

namespace bargmann {
namespace {

using core::GaussianForm;
using testing::expect_forms_near;
using namespace transforms;

QuadraticGenerator squeezing_generator(double g) {
  QuadraticGenerator gen;
  gen.b = CMatrix::Constant(1, 1, cplx(0.0, -g));
  gen.c = CMatrix::Zero(1, 1);
  gen.t = 1.0;
  return gen;
}

QuadraticGenerator splitter_generator(double theta) {
  QuadraticGenerator gen;
  gen.b = CMatrix::Zero(2, 2);
  gen.c = CMatrix::Zero(2, 2);
  gen.c(0, 1) = cplx(0.0, theta);
  gen.c(1, 0) = cplx(0.0, -theta);
  gen.t = 1.0;
  return gen;
}

TEST(InhomogeneousKernel, ZeroShiftIsIdentity) {
  expect_forms_near(inhomogeneous_kernel(CVector::Zero(2)), core::identity_kernel(2), 0.0, true);
}

TEST(InhomogeneousKernel, BlocksFollowTheShift) {
  CVector f(2);
  f << cplx(0.3, -0.1), cplx(-0.5, 0.4);
  const GaussianForm k = inhomogeneous_kernel(f);
  EXPECT_EQ(k.out_in(), CMatrix::Identity(2, 2));
  EXPECT_LE((k.b_in() - f.conjugate()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((k.b_out() + f).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(std::abs(k.c() - std::exp(-0.5 * f.squaredNorm())), 0.0, 1e-15);
}

TEST(InhomogeneousKernel, VacuumImageIsNormalizedShift) {
  CVector f(1);
  f << cplx(0.7, 0.2);
  const GaussianForm s = core::apply(inhomogeneous_kernel(f), GaussianForm::vacuum(1));
  EXPECT_NEAR(std::abs(s.b()(0) + f(0)), 0.0, 1e-15);
  EXPECT_NEAR(core::norm(s), 1.0, 1e-13);
}

TEST(InhomogeneousKernel, ShiftWithMinusIAlphaAtUnitTimeIsDisplacement) {
  const cplx alpha(0.4, 0.9);
  CVector f(1);
  f << -kI * alpha;
  expect_forms_near(linear_hamiltonian_kernel(f, 1.0), devices::displacement_kernel(alpha), 1e-15, true);
  // the inhomogeneous kernel with the same data differs only by the free phase
  CVector g(1);
  g << -alpha;
  expect_forms_near(inhomogeneous_kernel(g), devices::displacement_kernel(alpha), 1e-15, false);
}

TEST(LinearHamiltonian, ZeroTimeIsIdentity) {
  CVector f(2);
  f << 1.0, cplx(0.0, 2.0);
  expect_forms_near(linear_hamiltonian_kernel(f, 0.0), core::identity_kernel(2), 0.0, true);
}

TEST(LinearHamiltonian, DisplacementForm) {
  // e^{−|α|²/2} exp{ūv − ᾱv + αū}
  const cplx alpha(-0.3, 0.6);
  CVector f(1);
  f << -kI * alpha;
  const GaussianForm k = linear_hamiltonian_kernel(f, 1.0);
  EXPECT_NEAR(std::abs(k.b_in()(0) + std::conj(alpha)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.b_out()(0) - alpha), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.c() - std::exp(-0.5 * std::norm(alpha))), 0.0, 1e-15);
}

TEST(LinearHamiltonian, GroupPropertyIncludingPhase) {
  RandomSource rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    CVector f(1);
    f << testing::random_complex(rng, 0.8);
    const double t1 = rng.uniform();
    const double t2 = rng.uniform() - 0.5;
    const GaussianForm k = core::compose(linear_hamiltonian_kernel(f, t1), linear_hamiltonian_kernel(f, t2));
    expect_forms_near(k, linear_hamiltonian_kernel(f, t1 + t2), 1e-12, false);
    // phase from the oracle product
    const CMatrix u = fock::fock_linear_hamiltonian(f, t1, 40) * fock::fock_linear_hamiltonian(f, t2, 40);
    const CVector beta = testing::random_vector(rng, 1, 0.8);
    const CVector gamma = testing::random_vector(rng, 1, 0.8);
    const cplx symbolic = core::inner_product(testing::coherent_product(beta), core::apply(k, testing::coherent_product(gamma)));
    const CVector moved = u * testing::fock_coherent_product(gamma, 40);
    const cplx oracle = testing::fock_coherent_product(beta, 40).dot(moved);
    EXPECT_NEAR(std::abs(symbolic - oracle), 0.0, 1e-8);
  }
}

TEST(CheckSymplectic, IdentityPairIsClean) {
  const SymplecticReport r = check_symplectic(CMatrix::Identity(2, 2), CMatrix::Zero(2, 2));
  EXPECT_EQ(r.symmetry_residual, 0.0);
  EXPECT_EQ(r.unitarity_residual, 0.0);
  EXPECT_TRUE(r.ok());
}

TEST(CheckSymplectic, HyperbolicPairIsClean) {
  const double g = 0.8;
  const SymplecticReport r = check_symplectic(CMatrix::Constant(1, 1, std::cosh(g)),
                                              CMatrix::Constant(1, 1, -std::sinh(g)));
  EXPECT_LE(r.symmetry_residual, 1e-15);
  EXPECT_LE(r.unitarity_residual, 1e-14);
}

TEST(CheckSymplectic, IdentityPsiViolatesUnitarity) {
  const SymplecticReport r = check_symplectic(CMatrix::Identity(1, 1), CMatrix::Identity(1, 1));
  EXPECT_NEAR(r.unitarity_residual, 1.0, 1e-15);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(require_symplectic({CMatrix::Identity(1, 1), CMatrix::Identity(1, 1)}), ConstraintViolation);
  EXPECT_THROW(bogoliubov_kernel({CMatrix::Identity(1, 1), CMatrix::Identity(1, 1)}), ConstraintViolation);
}

TEST(CheckSymplectic, ShapeMismatchRejected) {
  EXPECT_THROW(check_symplectic(CMatrix::Identity(2, 2), CMatrix::Zero(1, 1)), DimensionMismatch);
}

TEST(CheckSymplectic, ViolationMessageNamesEquation) {
  CMatrix phi = CMatrix::Identity(2, 2);
  CMatrix psi = CMatrix::Zero(2, 2);
  psi(0, 1) = 0.3;  // breaks ΦΨᵀ − ΨΦᵀ = 0
  try {
    require_symplectic({phi, psi});
    FAIL() << "expected a constraint violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_NE(std::string(e.what()).find("ΦΨᵀ"), std::string::npos) << e.what();
  }
}

TEST(BogoliubovKernel, IdentityPair) {
  expect_forms_near(bogoliubov_kernel(SymplecticPair::identity(3)), core::identity_kernel(3), 0.0, true);
}

TEST(BogoliubovKernel, HyperbolicPairSqueezesVacuum) {
  for (double g : {0.2, 0.9, 1.7}) {
    const SymplecticPair s{CMatrix::Constant(1, 1, std::cosh(g)), CMatrix::Constant(1, 1, -std::sinh(g))};
    const GaussianForm v = core::apply(bogoliubov_kernel(s), GaussianForm::vacuum(1));
    const double t = std::tanh(g);
    EXPECT_NEAR(std::abs(v.a()(0, 0) - t), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(v.c()), std::pow(1.0 - t * t, 0.25), 1e-14);
  }
}

TEST(BogoliubovKernel, RotationGivesBeamSplitterBlocks) {
  const double theta = 0.7;
  CMatrix rot(2, 2);
  rot << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  const GaussianForm k = bogoliubov_kernel({rot, CMatrix::Zero(2, 2)});
  CMatrix expected(2, 2);
  expected << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  EXPECT_LE((k.out_in() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(std::abs(k.c()), 1.0, 1e-15);
}

TEST(BogoliubovKernel, SingularPhiRejected) {
  // ΦΦ† = I + ΨΨ† is positive definite on the constraint surface, so a
  // singular Φ always fails validation first.
  EXPECT_THROW(bogoliubov_kernel({CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)}), ConstraintViolation);
}

TEST(BogoliubovKernel, BlocksMatchClosedForms) {
  RandomSource rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const SymplecticPair s = testing::random_symplectic(rng, n);
    const GaussianForm k = bogoliubov_kernel(s);
    const CMatrix phi_inv = s.phi.inverse();
    EXPECT_LE((k.in_in() - s.psi.conjugate() * phi_inv).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((k.out_in() - phi_inv).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((k.out_out() + phi_inv * s.psi).cwiseAbs().maxCoeff(), 1e-12);
    const double expected_c = std::pow(std::abs((s.phi * s.phi.adjoint()).determinant()), -0.25);
    EXPECT_NEAR(std::abs(k.c()), expected_c, 1e-12);
  }
}

TEST(QuadraticHamiltonian, SqueezingGenerator) {
  for (double g : {0.25, 0.5, 1.3}) {
    const QuadraticGenerator gen = squeezing_generator(g);
    const SymplecticPair s = bogoliubov_from_generator(gen);
    EXPECT_NEAR(std::abs(s.phi(0, 0) - std::cosh(g)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(s.psi(0, 0) + std::sinh(g)), 0.0, 1e-10);
    const GaussianForm k = quadratic_hamiltonian_kernel(gen);
    EXPECT_NEAR(std::abs(k.out_out()(0, 0) - std::tanh(g)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(k.out_in()(0, 0) - 1.0 / std::cosh(g)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(k.in_in()(0, 0) + std::tanh(g)), 0.0, 1e-10);
  }
}

TEST(QuadraticHamiltonian, SplitterGeneratorIsRotationWithUnitC) {
  const double theta = 0.45;
  const QuadraticGenerator gen = splitter_generator(theta);
  const SymplecticPair s = bogoliubov_from_generator(gen);
  CMatrix rot(2, 2);
  rot << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  EXPECT_LE((s.phi - rot).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(s.psi.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(std::abs(quadratic_hamiltonian_kernel(gen).c() - 1.0), 0.0, 1e-12);
}

TEST(QuadraticHamiltonian, ZeroTimeIsIdentity) {
  RandomSource rng(61);
  QuadraticGenerator gen = testing::random_generator(rng, 2, 0.5);
  gen.t = 0.0;
  expect_forms_near(quadratic_hamiltonian_kernel(gen), core::identity_kernel(2), 1e-15, true);
}

TEST(QuadraticHamiltonian, InvalidGeneratorRejected) {
  QuadraticGenerator gen = squeezing_generator(0.3);
  gen.c(0, 0) = cplx(0.0, 1.0);  // not Hermitian
  EXPECT_THROW(quadratic_hamiltonian_kernel(gen), ConstraintViolation);
  QuadraticGenerator asym = splitter_generator(0.3);
  asym.b(0, 1) = 0.2;  // B not symmetric
  EXPECT_THROW(quadratic_hamiltonian_kernel(asym), ConstraintViolation);
}

TEST(QuadraticHamiltonian, PhaseIsContinuousOverLongEvolution) {
  // c(t) along a fine grid must not jump between square-root branches.
  QuadraticGenerator gen;
  gen.b = CMatrix::Constant(1, 1, cplx(0.3, 0.1));
  gen.c = CMatrix::Constant(1, 1, 1.2);
  cplx prev = 1.0;
  for (int i = 1; i <= 400; ++i) {
    gen.t = 0.05 * i;
    const cplx c = quadratic_hamiltonian_kernel(gen).c();
    EXPECT_LT(std::abs(c - prev), 0.2) << "branch jump at t = " << gen.t;
    prev = c;
  }
}

TEST(QuadraticHamiltonian, PhaseMatchesFockOracle) {
  RandomSource rng(62);
  for (int trial = 0; trial < 6; ++trial) {
    QuadraticGenerator gen = testing::random_generator(rng, 1, 0.4);
    gen.t = 3.0 * (rng.uniform() - 0.5);
    const GaussianForm k = quadratic_hamiltonian_kernel(gen);
    const CMatrix u = fock::fock_quadratic_hamiltonian(gen, 60);
    const cplx symbolic = core::inner_product(GaussianForm::vacuum(1), core::apply(k, GaussianForm::vacuum(1)));
    EXPECT_NEAR(std::abs(symbolic - u(0, 0)), 0.0, 1e-8);
  }
}

// --- properties ------------------------------------------------------------

TEST(Properties, BogoliubovGroupLaw) {
  // Kernels compose in the opposite order to the block matrices: the block
  // matrix acts on the ladder operators, the kernel on states.
  RandomSource rng(2001);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const SymplecticPair s1 = testing::random_symplectic(rng, n);
    const SymplecticPair s2 = testing::random_symplectic(rng, n);
    const GaussianForm lhs = core::compose(bogoliubov_kernel(s1), bogoliubov_kernel(s2));
    expect_forms_near(lhs, bogoliubov_kernel(s2 * s1), 1e-9, false);
  }
}

TEST(Properties, ProductOfSymplecticPairsStaysSymplectic) {
  RandomSource rng(2002);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const SymplecticPair s = testing::random_symplectic(rng, n) * testing::random_symplectic(rng, n);
    EXPECT_TRUE(check_symplectic(s.phi, s.psi).ok(1e-10));
  }
}

TEST(Properties, HamiltonianKernelAgreesWithBogoliubovKernel) {
  RandomSource rng(2003);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const QuadraticGenerator gen = testing::random_generator(rng, n, 0.5);
    const GaussianForm k4 = quadratic_hamiltonian_kernel(gen);
    const GaussianForm k2 = bogoliubov_kernel(bogoliubov_from_generator(gen));
    expect_forms_near(k4, k2, 1e-10, false);
  }
}

TEST(Properties, TimeDerivativeMatchesGenerator) {
  // d/dt U(t)|β⟩ = iH U(t)|β⟩, compared in the Fock basis
  RandomSource rng(2004);
  constexpr std::size_t kCutoff = 40;
  constexpr double kStep = 1e-4;
  for (int trial = 0; trial < 5; ++trial) {
    QuadraticGenerator gen = testing::random_generator(rng, 1, 0.3);
    gen.t = rng.uniform();
    const GaussianForm coh = devices::coherent_state(testing::random_complex(rng, 0.7));
    auto evolved = [&](double t) {
      QuadraticGenerator g = gen;
      g.t = t;
      return fock::state_to_fock(core::apply(quadratic_hamiltonian_kernel(g), coh), kCutoff).data();
    };
    const CVector derivative = (evolved(gen.t + kStep) - evolved(gen.t - kStep)) / (2.0 * kStep);
    const CMatrix h = fock::fock_quadratic_generator(gen.b, gen.c, kCutoff);
    const CVector now = evolved(gen.t);
    const CVector expected = kI * (h * now);
    // compare away from the truncation edge, where H_N and H differ
    const Eigen::Index low = kCutoff / 2;
    EXPECT_LE((derivative.head(low) - expected.head(low)).cwiseAbs().maxCoeff(), 1e-5);
  }
}

}  // namespace
}  // namespace bargmann
