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

#include "bargmann/devices.hpp"

#include <cmath>
#include <numbers>

#include "bargmann/errors.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann::devices {

GaussianForm displacement_kernel(cplx alpha) {
  CVector f(1);
  f(0) = -kI * alpha;
  return transforms::linear_hamiltonian_kernel(f, 1.0);
}

GaussianForm coherent_state(cplx alpha) {
  return core::apply(displacement_kernel(alpha), GaussianForm::vacuum(1));
}

core::GaussianFamily coherent_family() {
  // ½zᵀAz over z = (α, ᾱ, ū) gives −½αᾱ + αū.
  CMatrix a = CMatrix::Zero(3, 3);
  a(0, 1) = a(1, 0) = -0.5;
  a(0, 2) = a(2, 0) = 1.0;
  return core::GaussianFamily(1, 1, a, CVector::Zero(3), 1.0);
}

GaussianForm squeezer_kernel(double g) {
  transforms::QuadraticGenerator gen;
  gen.b = CMatrix::Constant(1, 1, -kI * g);
  gen.c = CMatrix::Zero(1, 1);
  gen.t = 1.0;
  return transforms::quadratic_hamiltonian_kernel(gen);
}

GaussianForm squeezed_vacuum(double g) {
  if (!std::isfinite(g)) throw InvalidArgument("squeezed_vacuum: g must be finite");
  return core::apply(squeezer_kernel(g), GaussianForm::vacuum(1));
}

GaussianForm beam_splitter(double theta) {
  transforms::QuadraticGenerator gen;
  gen.b = CMatrix::Zero(2, 2);
  gen.c = CMatrix::Zero(2, 2);
  gen.c(0, 1) = kI * theta;
  gen.c(1, 0) = -kI * theta;
  gen.t = 1.0;
  return transforms::quadratic_hamiltonian_kernel(gen);
}

GaussianForm half_beam_splitter() { return beam_splitter(std::numbers::pi / 4.0); }

double homodyne_expectation(const GaussianForm& psi, const HomodyneSetting& s) {
  if (!(s.lo_amplitude >= 0.0) || !std::isfinite(s.lo_amplitude) || !std::isfinite(s.phase))
    throw InvalidArgument("homodyne: local-oscillator amplitude must be finite and non-negative");
  if (!psi.is_state() || psi.n_out() != 1)
    throw DimensionMismatch("homodyne: expected a one-mode state");
  if (psi.is_delta_normalized() || std::abs(core::norm(psi) - 1.0) > 1e-9)
    throw InvalidArgument("homodyne: state must be normalized");
  const cplx a = core::annihilation_expectation(psi, 0);
  const double q = std::sqrt(2.0) * a.real();
  const double p = std::sqrt(2.0) * a.imag();
  return std::sqrt(2.0) * s.lo_amplitude * (q * std::cos(s.phase) + p * std::sin(s.phase));
}

GaussianForm displacement_limit(const GaussianForm& phi, cplx alpha, double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0))
    throw InvalidArgument("displacement_limit: θ must lie in (0, π/2)");
  if (!phi.is_state() || phi.n_out() != 1)
    throw DimensionMismatch("displacement_limit: expected a one-mode state");
  if (phi.is_delta_normalized())
    throw InvalidArgument("displacement_limit: state must be normalizable");
  const double cs = std::cos(theta);
  const cplx beta = alpha / std::sin(theta);
  const cplx alpha_bar = std::conj(alpha);
  const cplx a = phi.a()(0, 0);
  const cplx b = phi.b()(0);
  // φ(ū cos θ + ᾱ) times e^{−αū}, constants gathered into c.
  CMatrix a_new(1, 1);
  a_new(0, 0) = a * cs * cs;
  CVector b_new(1);
  b_new(0) = (a * alpha_bar + b) * cs - alpha;
  const cplx c_new = phi.c() * std::exp(-std::norm(beta) * (1.0 - cs)) *
                     std::exp(0.5 * a * alpha_bar * alpha_bar + b * alpha_bar);
  return GaussianForm(0, 1, a_new, b_new, c_new);
}

}  // namespace bargmann::devices
