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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bargmann/linalg.hpp"

namespace bargmann::cli {

/// Everything a single invocation needs. Field names match the JSON config
/// keys and the long flag names (underscores become dashes on the command
/// line).
struct ExperimentConfig {
  std::string command;  // teleport-cv | teleport-qubit | sweep | kernel-dump | oracle-check

  cplx gamma{0.5, 0.0};            // input coherent amplitude
  std::optional<double> g;         // squeezing parameter
  std::optional<double> q;         // tanh g; alternative to g
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;      // teleport-cv runs / sweep samples per point
  std::vector<double> grid{0.5, 1.0, 1.5};  // sweep values of g
  std::optional<cplx> outcome;     // fixed Bell outcome α = x + ip
  std::size_t cutoff = 40;         // Fock cutoff for oracle-check
  bool strict = false;             // cutoff warnings become errors
  std::string output;              // file path; empty writes to stdout
  std::string format;              // json | csv; empty picks the command default
  std::size_t threads = 1;         // sweep workers

  std::vector<cplx> input{{0.6, 0.0}, {0.8, 0.0}};  // teleport-qubit input amplitudes
  std::size_t shots = 1000;
  std::optional<std::size_t> forced;  // teleport-qubit forced outcome 2i + j

  std::string device = "displacement";  // kernel-dump device name
  cplx alpha{0.5, 0.0};                 // displacement / coherent amplitude
  double theta = 0.7853981633974483;    // beam-splitter angle

  /// Throws ConfigError on any inconsistency.
  void validate() const;
  /// g, taking q into account; defaults to 1.
  double squeezing() const;
};

/// Text shown by --help after the flag list: every config key and every
/// output field.
const std::string& field_reference();

/// Overlays the keys of a JSON config document onto cfg.
void apply_json(ExperimentConfig& cfg, const nlohmann::json& doc);

/// Parses argv (subcommand first) with flags > --config file > defaults.
/// Returns nullopt after printing help.
std::optional<ExperimentConfig> parse_arguments(int argc, const char* const* argv);

/// Runs one configured command, writing the artifact to cfg.output (or out)
/// and diagnostics to err. Returns the process exit status.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point used by the executable.
int main_entry(int argc, const char* const* argv);

}  // namespace bargmann::cli
