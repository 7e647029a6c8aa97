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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>

#include "bargmann/cli.hpp"
#include "bargmann/cv_teleport.hpp"
#include "bargmann/devices.hpp"
#include "bargmann/fock_oracle.hpp"
#include "bargmann/gaussian_form.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/qubit_teleport.hpp"
#include "bargmann/transforms.hpp"
#include "bargmann/validation.hpp"
#include "../support.hpp"

namespace {

using namespace bargmann;
using core::GaussianForm;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// max over A, b and |c|, optionally also the phase of c
double form_gap(const GaussianForm& x, const GaussianForm& y, bool phase) {
  const core::FormDistance d = core::distance(x, y);
  double worst = std::max({d.a, d.b, d.c_modulus});
  if (phase) worst = std::max(worst, d.c);
  return worst;
}

Outcome qubit_identity() {
  const auto t0 = Clock::now();
  RandomSource rng(1001);
  double worst_fid = 0.0;
  double worst_prob = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    CVector v = bargmann::testing::random_vector(rng, 2, 1.0);
    const qubit::QubitState psi(v / v.norm());
    for (std::size_t m = 0; m < 4; ++m) {
      const auto r = qubit::teleport_qubit(psi, m);
      worst_fid = std::max(worst_fid, std::abs(r.fidelity - 1.0));
      for (double p : r.probabilities) worst_prob = std::max(worst_prob, std::abs(p - 0.25));
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst_fid <= 1e-12 && worst_prob <= 1e-12 && elapsed < 1.0,
          fmt("max|F-1| = %.2e, max|p-1/4| = %.2e, %.3f s", worst_fid, worst_prob, elapsed)};
}

Outcome cv_closed_form() {
  const auto t0 = Clock::now();
  fock::OracleOptions opts;
  // q = 0.9 asks for a larger cutoff than 40; the grid fixes 40 regardless
  opts.warn = [](const std::string&) {};
  const double dev = validation::fidelity_grid_deviation(40, opts);
  const double elapsed = seconds_since(t0);
  return {dev <= 1e-6 && elapsed < 30.0,
          fmt("%.0f points, max deviation %.2e, %.3f s", static_cast<double>(validation::fidelity_grid().size()), dev,
              elapsed)};
}

Outcome device_kernels() {
  double worst = 0.0;
  for (double g : {0.25, 0.5, 1.0, 1.5}) {
    transforms::QuadraticGenerator gen;
    gen.b = CMatrix::Constant(1, 1, cplx(0.0, -g));
    gen.c = CMatrix::Zero(1, 1);
    gen.t = 1.0;
    const auto s = transforms::bogoliubov_from_generator(gen);
    const GaussianForm k = transforms::quadratic_hamiltonian_kernel(gen);
    worst = std::max({worst, std::abs(s.phi(0, 0) - std::cosh(g)), std::abs(s.psi(0, 0) + std::sinh(g)),
                      std::abs(k.out_out()(0, 0) - std::tanh(g))});
    const double norm_gap = std::abs(core::norm(devices::squeezed_vacuum(g)) - 1.0);
    if (norm_gap > 1e-9) return {false, fmt("squeezed vacuum norm off by %.2e at g = %.2f", norm_gap, g)};
    const GaussianForm epr = core::apply(devices::half_beam_splitter(),
                                         core::tensor(devices::squeezed_vacuum(g), devices::squeezed_vacuum(-g)));
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 1) = expected(1, 0) = std::tanh(g);
    worst = std::max({worst, linalg::max_abs(epr.a() - expected), epr.b().cwiseAbs().maxCoeff()});
  }
  return {worst <= 1e-10, fmt("max deviation %.2e over g in {0.25, 0.5, 1, 1.5}", worst)};
}

Outcome completeness() {
  const double coh = form_gap(devices::coherent_family().resolution(1.0), core::identity_kernel(1), true);
  const double bell = form_gap(cv::bell_completeness_kernel(), core::identity_kernel(2), true);
  return {coh <= 1e-10 && bell <= 1e-10, fmt("coherent %.2e, Bell %.2e", coh, bell)};
}

Outcome unitarity_group_law() {
  RandomSource rng(1005);
  double unitarity = 0.0;
  double group_ab = 0.0;
  double group_c = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const GaussianForm k = bargmann::testing::random_unitary_kernel(rng, n);
    unitarity = std::max(unitarity, form_gap(core::compose(core::adjoint(k), k), core::identity_kernel(n), true));
    const auto s1 = bargmann::testing::random_symplectic(rng, n);
    const auto s2 = bargmann::testing::random_symplectic(rng, n);
    const GaussianForm lhs = core::compose(transforms::bogoliubov_kernel(s1), transforms::bogoliubov_kernel(s2));
    const core::FormDistance d = core::distance(lhs, transforms::bogoliubov_kernel(s2 * s1));
    group_ab = std::max({group_ab, d.a, d.b});
    group_c = std::max(group_c, d.c_modulus);
  }
  return {unitarity <= 1e-9 && group_ab <= 1e-9 && group_c <= 1e-9,
          fmt("adjoint*self %.2e, group law (A, b) %.2e, |c| %.2e", unitarity, group_ab, group_c)};
}

Outcome oracle_equivalence() {
  double worst_dev = 0.0;
  double worst_change = 0.0;
  std::string worst_name;
  for (const auto& device : validation::device_cases()) {
    const double dev = validation::probe_deviation(device, 40);
    if (dev > worst_dev) worst_name = device.name;
    worst_dev = std::max(worst_dev, dev);
    worst_change = std::max(worst_change, validation::probe_cutoff_change(device, 40));
  }
  return {worst_dev <= 1e-6 && worst_change < 1e-6,
          fmt("max symbolic-oracle %.2e, max change 40->80 %.2e", worst_dev, worst_change) +
              (worst_name.empty() ? "" : " (worst: " + worst_name + ")")};
}

Outcome delta_family() {
  struct TestFunction {
    double centre, width, x;
  };
  const std::array<TestFunction, 3> fns{{{0.1, 0.8, 0.3}, {-0.5, 1.2, 0.4}, {0.9, 0.5, 0.6}}};
  const std::array<double, 3> sigmas{0.1, 0.05, 0.025};
  bool pass = true;
  double worst_ratio = 0.0;
  for (const auto& f : fns) {
    auto phi = [&](double y) { return std::exp(-0.5 * std::pow((y - f.centre) / f.width, 2)); };
    std::array<double, 3> err{};
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      const double sigma = sigmas[k];
      const GaussianForm m = cv::mollified_position_state(f.x, sigma);
      auto integrand = [&](double xp) {
        return core::inner_product(cv::quadrature_eigenstate(cv::Quadrature::position, xp), m).real() * phi(xp);
      };
      err[k] = std::abs(quadrature::adaptive_simpson(integrand, f.x - 12.0 * sigma, f.x + 12.0 * sigma, 1e-13) -
                        phi(f.x));
    }
    for (std::size_t k = 1; k < err.size(); ++k) {
      const double ratio = err[k] / err[k - 1];
      worst_ratio = std::max(worst_ratio, ratio);
      pass = pass && ratio <= 0.5;
    }
  }
  return {pass, fmt("worst error ratio per halving %.3f", worst_ratio)};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "bargmann_acceptance";
  std::filesystem::create_directories(dir);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::vector<cli::ExperimentConfig> configs(5);
  configs[0].command = "teleport-cv";
  configs[0].seed = 2024;
  configs[0].samples = 200;
  configs[1].command = "sweep";
  configs[1].seed = 2024;
  configs[1].samples = 200;
  configs[1].threads = 2;
  configs[2].command = "teleport-qubit";
  configs[2].seed = 2024;
  configs[3].command = "kernel-dump";
  configs[3].device = "epr";
  configs[4].command = "oracle-check";
  std::string failed;
  for (auto& cfg : configs) {
    std::array<std::string, 2> bytes;
    for (int run = 0; run < 2; ++run) {
      cfg.output = (dir / (cfg.command + "_" + std::to_string(run) + ".out")).string();
      std::ostringstream out;
      std::ostringstream err;
      if (cli::run(cfg, out, err) != 0) failed += " " + cfg.command + "(status)";
      bytes[run] = slurp(cfg.output);
    }
    if (bytes[0].empty() || bytes[0] != bytes[1]) failed += " " + cfg.command;
  }
  return {failed.empty(), failed.empty() ? "5 commands, identical bytes" : "differs:" + failed};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 8> criteria{{
      {"qubit teleportation identity", qubit_identity},
      {"CV fidelity closed form vs Fock oracle", cv_closed_form},
      {"device kernels", device_kernels},
      {"completeness integrals", completeness},
      {"unitarity and group law", unitarity_group_law},
      {"oracle equivalence", oracle_equivalence},
      {"delta-family convergence", delta_family},
      {"CLI determinism", determinism},
  }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
