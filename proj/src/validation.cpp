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

#include "bargmann/validation.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "bargmann/cv_teleport.hpp"
#include "bargmann/devices.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann::validation {
namespace {

core::GaussianForm coherent_product(const CVector& beta) {
  core::GaussianForm f = devices::coherent_state(beta(0));
  for (Eigen::Index k = 1; k < beta.size(); ++k)
    f = core::tensor(f, devices::coherent_state(beta(k)));
  return f;
}

CVector fock_coherent_product(const CVector& beta, std::size_t cutoff) {
  CVector v = fock::fock_coherent(beta(0), cutoff);
  for (Eigen::Index k = 1; k < beta.size(); ++k)
    v = Eigen::kroneckerProduct(v, fock::fock_coherent(beta(k), cutoff)).eval();
  return v;
}

transforms::QuadraticGenerator two_mode_generator() {
  transforms::QuadraticGenerator gen;
  gen.b.resize(2, 2);
  gen.b << cplx(0.15, -0.2), cplx(0.1, 0.05), cplx(0.1, 0.05), cplx(-0.1, 0.1);
  gen.c.resize(2, 2);
  gen.c << 0.3, cplx(0.2, -0.35), cplx(0.2, 0.35), -0.25;
  gen.t = 1.0;
  return gen;
}

}  // namespace

std::vector<DeviceCase> device_cases() {
  const cplx alpha(0.4, -0.3);
  const double g = 0.5;
  const double theta = 0.6;
  CVector f(1);
  f << cplx(0.3, 0.2);
  const double t = 0.8;
  const auto gen = two_mode_generator();
  // Beam splitter as exp(i·C_jk a_j†a_k) with C = [[0, iθ], [−iθ, 0]].
  auto splitter = [](double th) {
    transforms::QuadraticGenerator s;
    s.b = CMatrix::Zero(2, 2);
    s.c = CMatrix::Zero(2, 2);
    s.c(0, 1) = cplx(0.0, th);
    s.c(1, 0) = cplx(0.0, -th);
    s.t = 1.0;
    return s;
  };
  const auto bs = splitter(theta);
  const auto half = splitter(std::numbers::pi / 4.0);
  return {
      {"displacement", 1, devices::displacement_kernel(alpha),
       [alpha](std::size_t n, const CVector& v) -> CVector { return fock::fock_displacement(alpha, n) * v; }},
      {"squeezer", 1, devices::squeezer_kernel(g),
       [g](std::size_t n, const CVector& v) -> CVector { return fock::fock_squeezer(g, n) * v; }},
      {"beam_splitter", 2, devices::beam_splitter(theta),
       [bs](std::size_t n, const CVector& v) { return fock::fock_apply_quadratic(bs, n, v); }},
      {"half_beam_splitter", 2, devices::half_beam_splitter(),
       [half](std::size_t n, const CVector& v) { return fock::fock_apply_quadratic(half, n, v); }},
      {"linear_hamiltonian", 1, transforms::linear_hamiltonian_kernel(f, t),
       [f, t](std::size_t n, const CVector& v) -> CVector { return fock::fock_linear_hamiltonian(f, t, n) * v; }},
      {"quadratic_hamiltonian", 2, transforms::quadratic_hamiltonian_kernel(gen),
       [gen](std::size_t n, const CVector& v) { return fock::fock_apply_quadratic(gen, n, v); }},
  };
}

std::vector<CVector> probes(std::size_t modes) {
  const std::vector<cplx> single{0.0, {0.7, 0.0}, {-0.4, 0.5}, {0.3, -0.9}};
  std::vector<CVector> out;
  if (modes == 1) {
    for (cplx b : single) out.push_back(CVector::Constant(1, b));
  } else if (modes == 2) {
    for (std::size_t i = 0; i < single.size(); ++i) {
      CVector v(2);
      v << single[i], single[(i + 1) % single.size()];
      out.push_back(v);
    }
  } else {
    throw InvalidArgument("probes: one or two modes only");
  }
  return out;
}

cplx symbolic_probe(const core::GaussianForm& kernel, const CVector& bra, const CVector& ket) {
  return core::inner_product(coherent_product(bra), core::apply(kernel, coherent_product(ket)));
}

cplx oracle_probe(const DeviceCase& device, const CVector& bra, const CVector& ket, std::size_t cutoff) {
  const CVector b = fock_coherent_product(bra, cutoff);
  const CVector k = fock_coherent_product(ket, cutoff);
  return b.dot(device.fock_action(cutoff, k));
}

namespace {

// All probe pairs in one pass: one action per ket.
std::vector<cplx> oracle_probe_table(const DeviceCase& device, std::size_t cutoff) {
  std::vector<cplx> out;
  const auto ps = probes(device.modes);
  for (const CVector& ket : ps) {
    const CVector moved = device.fock_action(cutoff, fock_coherent_product(ket, cutoff));
    for (const CVector& bra : ps) out.push_back(fock_coherent_product(bra, cutoff).dot(moved));
  }
  return out;
}

}  // namespace

double probe_deviation(const DeviceCase& device, std::size_t cutoff) {
  const auto table = oracle_probe_table(device, cutoff);
  const auto ps = probes(device.modes);
  double worst = 0.0;
  std::size_t i = 0;
  for (const CVector& ket : ps)
    for (const CVector& bra : ps)
      worst = std::max(worst, std::abs(symbolic_probe(device.kernel, bra, ket) - table[i++]));
  return worst;
}

double probe_cutoff_change(const DeviceCase& device, std::size_t cutoff) {
  const auto t1 = oracle_probe_table(device, cutoff);
  const auto t2 = oracle_probe_table(device, 2 * cutoff);
  double worst = 0.0;
  for (std::size_t i = 0; i < t1.size(); ++i) worst = std::max(worst, std::abs(t1[i] - t2[i]));
  return worst;
}

std::vector<FidelityPoint> fidelity_grid() {
  const std::vector<cplx> gammas{0.0, {0.8, 0.0}, {-0.5, 0.6}};
  const std::vector<cplx> alphas{0.0, {0.0, 0.6}, {0.9, -0.3}};
  const std::vector<double> qs{0.0, 0.5, 0.9};
  std::vector<FidelityPoint> out;
  for (cplx gm : gammas)
    for (cplx al : alphas)
      for (double q : qs) out.push_back({gm, al, q});
  return out;
}

double fidelity_grid_deviation(std::size_t cutoff, const fock::OracleOptions& options) {
  double worst = 0.0;
  for (const auto& p : fidelity_grid())
    worst = std::max(worst, std::abs(cv::fidelity_coherent(p.gamma, p.alpha, p.q) -
                                     fock::oracle_teleport_cv(p.gamma, p.alpha, p.q, cutoff, options)));
  return worst;
}

double fidelity_grid_cutoff_change(std::size_t cutoff, const fock::OracleOptions& options) {
  double worst = 0.0;
  for (const auto& p : fidelity_grid())
    worst = std::max(worst,
                     std::abs(fock::oracle_teleport_cv(p.gamma, p.alpha, p.q, cutoff, options) -
                              fock::oracle_teleport_cv(p.gamma, p.alpha, p.q, 2 * cutoff, options)));
  return worst;
}

std::vector<CheckResult> run_oracle_suite(std::size_t cutoff, const fock::OracleOptions& options) {
  std::vector<CheckResult> out;
  out.push_back({"fidelity_closed_form", fidelity_grid_deviation(cutoff, options), 1e-6});
  out.push_back({"fidelity_cutoff_doubling", fidelity_grid_cutoff_change(cutoff, options), 1e-6});
  for (const DeviceCase& d : device_cases()) {
    out.push_back({"probe_" + d.name, probe_deviation(d, cutoff), 1e-6});
    out.push_back({"probe_" + d.name + "_cutoff_doubling", probe_cutoff_change(d, cutoff), 1e-6});
  }
  // Fock expansions of the named states against oracle matrices on vacuum.
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  CVector vac = CVector::Zero(d);
  vac(0) = 1.0;
  const cplx alpha(0.6, -0.4);
  const double g = 0.5;
  double state_dev = 0.0;
  // Only the lower half: the truncated exponential is distorted near N.
  const Eigen::Index low = d / 2 + 1;
  auto gap = [&](const core::GaussianForm& state, const CMatrix& u) {
    const CVector exact = fock::state_to_fock(state, cutoff).data();
    const CVector truncated = u * vac;
    return (exact.head(low) - truncated.head(low)).cwiseAbs().maxCoeff();
  };
  state_dev = std::max(state_dev, gap(devices::coherent_state(alpha), fock::fock_displacement(alpha, cutoff)));
  state_dev = std::max(state_dev, gap(devices::squeezed_vacuum(g), fock::fock_squeezer(g, cutoff)));
  out.push_back({"state_expansion", state_dev, 1e-8});
  const double mass = cv::bell_measurement_density({0.6, 0.2}, 0.5).mass;
  out.push_back({"bell_density_mass", std::abs(mass - 1.0), 1e-10});
  return out;
}

}  // namespace bargmann::validation
