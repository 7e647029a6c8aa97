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

#include "bargmann/cv_teleport.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bargmann/devices.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/json_io.hpp"
#include "bargmann/quadrature.hpp"

namespace bargmann::cv {
namespace {

constexpr double kPi = std::numbers::pi;

void require_q(double q, const char* what) {
  if (!(q >= 0.0 && q < 1.0))
    throw InvalidArgument(std::string(what) + ": q must lie in [0, 1), got " + std::to_string(q));
}

}  // namespace

GaussianForm epr_state(double q) {
  require_q(q, "epr_state");
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 1) = a(1, 0) = q;
  return GaussianForm(0, 2, a, CVector::Zero(2), std::sqrt(1.0 - q * q));
}

GaussianForm generalized_bell(cplx alpha) {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 1) = a(1, 0) = 1.0;
  CVector b(2);
  b << alpha, -std::conj(alpha);
  const cplx c = std::exp(-0.5 * std::norm(alpha)) / std::sqrt(kPi);
  return GaussianForm(0, 2, a, b, c, true);
}

core::GaussianFamily bell_family() {
  // z = (α, ᾱ, ū₀, ū₁): −½αᾱ + ū₀ū₁ + αū₀ − ᾱū₁
  CMatrix a = CMatrix::Zero(4, 4);
  a(0, 1) = a(1, 0) = -0.5;
  a(2, 3) = a(3, 2) = 1.0;
  a(0, 2) = a(2, 0) = 1.0;
  a(1, 3) = a(3, 1) = -1.0;
  return core::GaussianFamily(1, 2, a, CVector::Zero(4), 1.0 / std::sqrt(kPi), true);
}

GaussianForm bell_completeness_kernel() {
  // dx dp = π · dᾱdα/(2πi)
  return bell_family().resolution(kPi);
}

GaussianForm coherent_completeness_kernel() { return devices::coherent_family().resolution(1.0); }

GaussianForm quadrature_eigenstate(Quadrature kind, double lambda) {
  if (!std::isfinite(lambda)) throw InvalidArgument("quadrature_eigenstate: non-finite eigenvalue");
  const double c = std::pow(kPi, -0.25) * std::exp(-0.5 * lambda * lambda);
  CMatrix a(1, 1);
  CVector b(1);
  if (kind == Quadrature::position) {
    a(0, 0) = -1.0;
    b(0) = std::sqrt(2.0) * lambda;
  } else {
    a(0, 0) = 1.0;
    b(0) = kI * std::sqrt(2.0) * lambda;
  }
  return GaussianForm(0, 1, a, b, c, true);
}

GaussianForm mollified_position_state(double x, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(x))
    throw InvalidArgument("mollified_position_state: need finite x and σ > 0");
  const double s2 = sigma * sigma;
  const double w = 1.0 + 1.0 / s2;
  CMatrix a(1, 1);
  a(0, 0) = (s2 - 1.0) / (s2 + 1.0);
  CVector b(1);
  b(0) = std::sqrt(2.0) * x / (s2 * w);
  const double c = std::pow(kPi, -0.25) / std::sqrt(2.0 * kPi * s2) * std::sqrt(2.0 * kPi / w) *
                   std::exp(x * x / (2.0 * s2 * s2 * w) - x * x / (2.0 * s2));
  return GaussianForm(0, 1, a, b, c);
}

double OutcomeDensity::operator()(double x, double p) const {
  const RVector d = RVector{{x - mean(0), p - mean(1)}};
  const double det = covariance.determinant();
  const double quad = d.dot(covariance.inverse() * d);
  return std::exp(-0.5 * quad) / (2.0 * kPi * std::sqrt(det));
}

cplx OutcomeDensity::sample(RandomSource& rng) const {
  const Eigen::LLT<RMatrix> llt(covariance);
  const RVector z{{rng.normal(), rng.normal()}};
  const RVector r = mean + llt.matrixL() * z;
  return {r(0), r(1)};
}

OutcomeDensity bell_measurement_density(cplx gamma, double q) {
  require_q(q, "bell_measurement_density");
  const GaussianForm psi = core::tensor(devices::coherent_state(gamma), epr_state(q));
  const std::array<std::size_t, 2> alice{0, 1};
  const core::GaussianExpr p = bell_family().contract(psi, alice).norm_squared();
  // (α, ᾱ) = T(x, p) with T = [[1, i], [1, −i]]; the density is real.
  CMatrix t(2, 2);
  t << 1.0, kI, 1.0, -kI;
  const RMatrix precision = -(t.transpose() * p.q * t).real();
  const RVector h = (t.transpose() * p.l).real();
  const Eigen::LLT<RMatrix> llt(precision);
  if (llt.info() != Eigen::Success)
    throw DivergentIntegral("bell_measurement_density: outcome law is not normalizable");
  OutcomeDensity d;
  d.covariance = precision.inverse();
  d.mean = d.covariance * h;
  d.mass = p.c.real() * 2.0 * kPi / std::sqrt(precision.determinant()) *
           std::exp(0.5 * h.dot(d.mean));
  return d;
}

double CVTeleportConfig::q() const { return std::tanh(g); }

void CVTeleportConfig::validate() const {
  if (!(g >= 0.0) || !std::isfinite(g)) throw InvalidArgument("teleport-cv: g must be finite and ≥ 0");
  if (!(q() < 1.0))
    throw InvalidArgument("teleport-cv: tanh g rounds to 1; the resource is not normalizable");
  if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
    throw InvalidArgument("teleport-cv: γ must be finite");
  if (fixed_outcome && (!std::isfinite(fixed_outcome->real()) || !std::isfinite(fixed_outcome->imag())))
    throw InvalidArgument("teleport-cv: outcome must be finite");
}

CVTeleportResult teleport_cv(const CVTeleportConfig& cfg, RandomSource& rng) {
  cfg.validate();
  const double q = cfg.q();
  CVTeleportResult r{cfg.g, q, cfg.gamma, 0.0, GaussianForm::vacuum(1), GaussianForm::vacuum(1)};
  r.outcome = cfg.fixed_outcome ? *cfg.fixed_outcome
                                : bell_measurement_density(cfg.gamma, q).sample(rng);
  const GaussianForm reference = devices::coherent_state(cfg.gamma);
  const GaussianForm total = core::tensor(reference, epr_state(q));
  const std::array<std::size_t, 2> alice{0, 1};
  r.bob_state_raw = core::partial_contract(total, alice, generalized_bell(r.outcome));
  r.output_state = core::apply(devices::displacement_kernel(r.outcome), r.bob_state_raw);
  // The raw state carries π^{−1/2}√(1−q²) from the Bell bra and the
  // normalized resource; φ is the bare sum Σqⁿ D(α)|n⟩⟨n|D(α)†|γ⟩.
  const GaussianForm phi = r.output_state.scaled(std::sqrt(kPi) / std::sqrt(1.0 - q * q));
  r.fidelity = fidelity_pure(reference, phi);
  r.fidelity_normalized = fidelity_pure(reference, r.output_state) / core::norm(r.output_state);
  return r;
}

CVTeleportResult teleport_cv(const CVTeleportConfig& cfg) {
  RandomSource rng(cfg.seed);
  return teleport_cv(cfg, rng);
}

double fidelity_coherent(cplx gamma, cplx alpha, double q) {
  require_q(q, "fidelity_coherent");
  return std::exp(-(1.0 - q) * std::norm(alpha - gamma));
}

double fidelity_pure(const GaussianForm& ref, const GaussianForm& phi) {
  return std::abs(core::inner_product(ref, phi));
}

nlohmann::json to_json(const CVTeleportResult& r) {
  return nlohmann::json{{"gamma", io::to_json(r.gamma)},
                        {"g", r.g},
                        {"q", r.q},
                        {"x_minus", r.outcome.real()},
                        {"p_plus", r.outcome.imag()},
                        {"fidelity", r.fidelity},
                        {"fidelity_normalized", r.fidelity_normalized}};
}

double window_weight(double lambda, double a, double b, double epsilon) {
  return 0.5 * (std::erf((lambda - a) / epsilon) - std::erf((lambda - b) / epsilon));
}

SmearedOutcome smeared_quadrature_measurement(const GaussianForm& psi, double a, double b,
                                              double epsilon, Quadrature kind,
                                              std::size_t cutoff) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidArgument("smeared measurement: window needs finite a < b");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw InvalidArgument("smeared measurement: ε must be positive");
  if (!psi.is_state() || psi.n_out() != 1)
    throw DimensionMismatch("smeared measurement: expected a one-mode state");
  if (psi.is_delta_normalized())
    throw InvalidArgument("smeared measurement: state must be normalizable");
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  // Entries 0..N: ∫χ⟨n|λ⟩⟨λ|ψ⟩; entry N+1: ∫χ²|⟨λ|ψ⟩|².
  const std::function<CVector(double)> integrand = [&](double lambda) {
    const double w = window_weight(lambda, a, b, epsilon);
    const GaussianForm eig = quadrature_eigenstate(kind, lambda);
    const cplx overlap = core::inner_product(eig, psi);
    CVector out(d + 1);
    out.head(d) = std::sqrt(std::max(w, 0.0)) * overlap * fock::expand_to_fock(eig, cutoff).data();
    out(d) = w * std::norm(overlap);
    return out;
  };
  // χ is below 1e−27 beyond 8ε outside the window.
  const CVector total = quadrature::adaptive_simpson(integrand, a - 8.0 * epsilon,
                                                     b + 8.0 * epsilon, 1e-8);
  const double probability = total(d).real() / std::pow(core::norm(psi), 2);
  if (!(probability >= 1e-12))
    throw MeasurementError("smeared measurement: outcome probability " +
                           std::to_string(probability) + " is below 1e-12");
  CVector amps = total.head(d) / std::sqrt(total(d).real());
  return {fock::FockTensor(1, cutoff, amps), probability};
}

}  // namespace bargmann::cv
