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
#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bargmann/cv_teleport.hpp"
#include "bargmann/devices.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/fock_oracle.hpp"
#include "bargmann/transforms.hpp"
#include "../support.hpp"

namespace bargmann {
namespace {

fock::OracleOptions quiet() {
  fock::OracleOptions o;
  o.warn = [](const std::string&) {};
  return o;
}

CVector vacuum(std::size_t cutoff) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(cutoff + 1));
  v(0) = 1.0;
  return v;
}

TEST(FockDisplacement, VacuumColumnIsPoissonAmplitude) {
  const cplx alpha(0.7, -0.4);
  const CVector col = fock::fock_displacement(alpha, 60) * vacuum(60);
  for (int n = 0; n <= 20; ++n) {
    const cplx expected = std::exp(-0.5 * std::norm(alpha) + static_cast<double>(n) * std::log(alpha) - 0.5 * std::lgamma(n + 1.0));
    EXPECT_NEAR(std::abs(col(n) - expected), 0.0, 1e-8) << n;
  }
}

TEST(FockDisplacement, AdjointIsNegatedArgument) {
  const cplx alpha(0.3, 0.2);
  const CMatrix d = fock::fock_displacement(alpha, 30);
  EXPECT_LT((d.adjoint() - fock::fock_displacement(-alpha, 30)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FockSqueezer, EvenSupportAndClosedForm) {
  const double g = 0.4;
  const CVector col = fock::fock_squeezer(g, 60) * vacuum(60);
  for (int n = 0; n <= 60; n += 2) {
    if (n > 30) break;
    const int k = n / 2;
    // sech^{1/2}g · tanhᵏg · √(2k)!/(2ᵏ k!)
    const double expected = std::exp(-0.5 * std::log(std::cosh(g)) + k * std::log(std::tanh(g)) +
                                     0.5 * std::lgamma(n + 1.0) - k * std::log(2.0) - std::lgamma(k + 1.0));
    EXPECT_NEAR(std::abs(col(n) - expected), 0.0, 1e-9) << n;
  }
  for (int n = 1; n <= 60; n += 2) EXPECT_EQ(std::abs(col(n)), 0.0) << n;
}

TEST(FockBeamSplitter, ConservesTotalPhotonNumber) {
  const std::size_t cutoff = 6;
  const CMatrix u = fock::fock_beam_splitter(0.7, cutoff);
  const fock::Ladder l = fock::ladder_matrices(cutoff);
  const CMatrix n1 = fock::on_mode(l.adag * l.a, 0, 2);
  const CMatrix n2 = fock::on_mode(l.adag * l.a, 1, 2);
  const CMatrix total = n1 + n2;
  EXPECT_LT((u * total - total * u).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(fock::truncation_leakage(u, 2, cutoff), 1e-12);
}

TEST(FockBeamSplitter, SinglePhotonSplitsByCosineAndSine) {
  const std::size_t cutoff = 3;
  const double theta = 0.45;
  const CMatrix u = fock::fock_beam_splitter(theta, cutoff);
  fock::FockTensor in(2, cutoff);
  in.data()(static_cast<Eigen::Index>(in.flat_index({1, 0}))) = 1.0;
  const fock::FockTensor out(2, cutoff, u * in.data());
  EXPECT_NEAR(std::abs(out({1, 0})), std::cos(theta), 1e-13);
  EXPECT_NEAR(std::abs(out({0, 1})), std::sin(theta), 1e-13);
}

TEST(FockLadder, OnModeShape) {
  const fock::Ladder l = fock::ladder_matrices(4);
  EXPECT_EQ(l.a(0, 1), cplx(1.0));
  EXPECT_NEAR(l.a(2, 3).real(), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(fock::on_mode(l.a, 2, 3).rows(), 125);
}

TEST(StateToFock, CoherentStateCoefficients) {
  const cplx gamma(0.5, 0.25);
  const fock::FockTensor f = fock::state_to_fock(devices::coherent_state(gamma), 30);
  EXPECT_LT((f.data() - fock::fock_coherent(gamma, 30)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(StateToFock, PositionEigenstateIsHermiteFunction) {
  const double x = 0.8;
  const fock::FockTensor f = fock::expand_to_fock(cv::quadrature_eigenstate(cv::Quadrature::position, x), 25);
  // ψ_n(x) by the three-term recurrence
  std::vector<double> psi(26);
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 2; n <= 25; ++n)
    psi[n] = std::sqrt(2.0 / n) * x * psi[n - 1] - std::sqrt((n - 1.0) / n) * psi[n - 2];
  for (int n = 0; n <= 25; ++n) EXPECT_NEAR(std::abs(f.data()(n) - psi[n]), 0.0, 1e-12) << n;
}

TEST(StateToFock, TwoModeSqueezedVacuum) {
  const double q = 0.4;
  const fock::FockTensor f = fock::state_to_fock(cv::epr_state(q), 30);
  EXPECT_NEAR(std::abs(f({3, 3}) - std::sqrt(1 - q * q) * q * q * q), 0.0, 1e-14);
  EXPECT_EQ(std::abs(f({3, 2})), 0.0);
}

TEST(StateToFock, TailBeyondCutoffIsAnError) {
  EXPECT_THROW(fock::state_to_fock(devices::coherent_state(3.0), 5), CutoffError);
  EXPECT_NO_THROW(fock::expand_to_fock(devices::coherent_state(3.0), 5));
  EXPECT_THROW(fock::state_to_fock(core::GaussianForm::vacuum(4), 2), InvalidArgument);
}

TEST(CutoffRule, Values) {
  EXPECT_EQ(fock::required_cutoff(0.0, 0.0, 0.0), 20u);
  EXPECT_EQ(fock::required_cutoff(1.0, 1.0, 0.5), 68u);
  // q = 0.9 needs far more than the acceptance cutoff of 40
  EXPECT_GT(fock::required_cutoff(0.0, 0.0, std::atanh(0.9)), 40u);
}

TEST(CutoffRule, WarnsOrThrows) {
  std::vector<std::string> seen;
  fock::OracleOptions o;
  o.warn = [&](const std::string& m) { seen.push_back(m); };
  fock::check_cutoff(30, 20, o);
  EXPECT_TRUE(seen.empty());
  fock::check_cutoff(10, 20, o);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_NE(seen[0].find("20"), std::string::npos);
  o.strict = true;
  EXPECT_THROW(fock::check_cutoff(10, 20, o), CutoffError);
  EXPECT_THROW(fock::oracle_teleport_cv(0.5, 0.0, 0.95, 20, o), CutoffError);
}

TEST(CutoffRule, StrictModeFromEnvironment) {
  ::setenv("BARGMANN_STRICT", "1", 1);
  EXPECT_TRUE(fock::OracleOptions::from_environment().strict);
  ::setenv("BARGMANN_STRICT", "0", 1);
  EXPECT_FALSE(fock::OracleOptions::from_environment().strict);
  ::unsetenv("BARGMANN_STRICT");
  EXPECT_FALSE(fock::OracleOptions::from_environment().strict);
}

TEST(OracleTeleport, ReferenceValues) {
  EXPECT_NEAR(fock::oracle_teleport_cv(0.4, 0.4, 0.5, 40, quiet()), 1.0, 1e-10);
  EXPECT_NEAR(fock::oracle_teleport_cv(1.0, 0.0, 0.5, 40, quiet()), std::exp(-0.5), 1e-8);
  // no entanglement: the overlap |⟨γ|α⟩|²
  EXPECT_NEAR(fock::oracle_teleport_cv({0.3, 0.1}, {-0.2, 0.4}, 0.0, 40, quiet()),
              std::exp(-std::norm(cplx(0.5, -0.3))), 1e-12);
  EXPECT_THROW(fock::oracle_teleport_cv(0.0, 0.0, 1.0, 40, quiet()), InvalidArgument);
}

TEST(OracleTeleport, ConvergesWithCutoff) {
  RandomSource rng(301);
  for (int i = 0; i < 10; ++i) {
    const cplx gamma = testing::random_complex(rng, 0.6);
    const cplx alpha = testing::random_complex(rng, 0.6);
    const double q = 0.6 * rng.uniform();
    const double f20 = fock::oracle_teleport_cv(gamma, alpha, q, 20, quiet());
    const double f40 = fock::oracle_teleport_cv(gamma, alpha, q, 40, quiet());
    EXPECT_LT(std::abs(f20 - f40), 1e-6);
    EXPECT_NEAR(f40, cv::fidelity_coherent(gamma, alpha, q), 1e-10);
  }
}

TEST(Leakage, DetectsTruncationArtifacts) {
  EXPECT_LT(fock::truncation_leakage(fock::fock_displacement(0.3, 40), 1, 40), 1e-10);
  // exp of a truncated anti-Hermitian matrix is unitary by construction, so
  // cut a block out of a larger one to get a genuinely leaky map
  const CMatrix block = fock::fock_displacement(2.0, 40).topLeftCorner(9, 9);
  EXPECT_GT(fock::truncation_leakage(block, 1, 8), 1e-3);
  EXPECT_THROW(fock::truncation_leakage(CMatrix::Identity(5, 5), 2, 3), DimensionMismatch);
}

TEST(SparseRoute, GeneratorMatchesDense) {
  RandomSource rng(302);
  const auto gen = testing::random_generator(rng, 2, 0.5);
  const CMatrix dense = fock::fock_quadratic_generator(gen.b, gen.c, 5);
  const CMatrix sparse = CMatrix(fock::sparse_quadratic_generator(gen.b, gen.c, 5));
  EXPECT_LT((dense - sparse).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(SparseRoute, ActionMatchesDenseExponential) {
  RandomSource rng(303);
  for (int trial = 0; trial < 5; ++trial) {
    const auto gen = testing::random_generator(rng, 2, 0.4);
    const std::size_t cutoff = 8;
    const CMatrix h = fock::fock_quadratic_generator(gen.b, gen.c, cutoff);
    const CVector v = testing::random_vector(rng, h.rows(), 1.0);
    const CVector dense = linalg::expm(kI * gen.t * h) * v;
    const CVector sparse =
        fock::expm_action(fock::sparse_quadratic_generator(gen.b, gen.c, cutoff), kI * gen.t, v);
    EXPECT_LT((dense - sparse).cwiseAbs().maxCoeff(), 1e-11 * v.norm());
    const CVector routed = fock::fock_apply_quadratic(gen, cutoff, v);
    const CVector full = fock::fock_quadratic_hamiltonian(gen, cutoff) * v;
    EXPECT_LT((routed - full).cwiseAbs().maxCoeff(), 1e-11 * v.norm());
  }
}

TEST(SparseRoute, AppliesBeamSplitterExactly) {
  // sector-by-sector splitter against the generic action
  const double theta = 0.6;
  transforms::QuadraticGenerator gen;
  gen.b = CMatrix::Zero(2, 2);
  gen.c = CMatrix::Zero(2, 2);
  gen.c(0, 1) = kI * theta;
  gen.c(1, 0) = -kI * theta;
  gen.t = 1.0;
  RandomSource rng(304);
  const CVector v = testing::random_vector(rng, 49, 1.0);
  const CVector a = fock::fock_beam_splitter(theta, 6) * v;
  const CVector b = fock::fock_apply_quadratic(gen, 6, v);
  EXPECT_LT((a - b).norm(), 1e-11);
}

}  // namespace
}  // namespace bargmann
