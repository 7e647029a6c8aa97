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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bargmann/fock_oracle.hpp"
#include "bargmann/gaussian_form.hpp"

namespace bargmann::validation {

/// A device known both as a Gaussian kernel and as a truncated Fock matrix.
struct DeviceCase {
  std::string name;
  std::size_t modes;
  core::GaussianForm kernel;
  // U·v in the truncated space, by whatever route fits the cutoff.
  std::function<CVector(std::size_t cutoff, const CVector& v)> fock_action;
};

/// Displacement, squeezer, beam splitters, a linear and a two-mode
/// quadratic generator, at fixed parameters.
std::vector<DeviceCase> device_cases();

/// Coherent probes with |β| ≤ 1 (one complex amplitude per mode).
std::vector<CVector> probes(std::size_t modes);

/// ⟨β₁|K|β₂⟩ from the Gaussian calculus.
cplx symbolic_probe(const core::GaussianForm& kernel, const CVector& bra, const CVector& ket);
/// The same matrix element from the truncated matrix.
cplx oracle_probe(const DeviceCase& device, const CVector& bra, const CVector& ket, std::size_t cutoff);

/// max over probe pairs of |symbolic − oracle| at the given cutoff.
double probe_deviation(const DeviceCase& device, std::size_t cutoff);
/// max over probe pairs of |oracle(N) − oracle(2N)|.
double probe_cutoff_change(const DeviceCase& device, std::size_t cutoff);

/// 3×3×3 grid of (γ, α, q) with |γ|, |α| ≤ 1 and q ∈ {0, 0.5, 0.9}.
struct FidelityPoint {
  cplx gamma;
  cplx alpha;
  double q;
};
std::vector<FidelityPoint> fidelity_grid();

/// max |fidelity_coherent − oracle_teleport_cv| over the grid.
double fidelity_grid_deviation(std::size_t cutoff, const fock::OracleOptions& options);
/// max change of oracle_teleport_cv between cutoff N and 2N over the grid.
double fidelity_grid_cutoff_change(std::size_t cutoff, const fock::OracleOptions& options);

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_deviation <= tolerance; }
};

/// Every cross-check between the symbolic engine and the Fock oracle.
std::vector<CheckResult> run_oracle_suite(std::size_t cutoff, const fock::OracleOptions& options);

}  // namespace bargmann::validation
