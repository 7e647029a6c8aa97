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

#include "bargmann/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bargmann/cv_teleport.hpp"
#include "bargmann/devices.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/json_io.hpp"
#include "bargmann/qubit_teleport.hpp"
#include "bargmann/random.hpp"
#include "bargmann/transforms.hpp"
#include "bargmann/validation.hpp"

namespace bargmann::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kCommands{"teleport-cv", "teleport-qubit", "sweep", "kernel-dump",
                                         "oracle-check"};
const std::vector<std::string> kDevices{"identity",      "displacement",       "coherent",
                                        "squeezer",      "squeezed_vacuum",    "beam_splitter",
                                        "half_beam_splitter", "epr",           "bell"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string list(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// "re" or "re,im"
cplx parse_complex(const std::string& text) {
  std::stringstream ss(text);
  std::string re_s;
  std::string im_s;
  std::getline(ss, re_s, ',');
  std::getline(ss, im_s);
  try {
    std::size_t used = 0;
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::invalid_argument(text);
    double im = 0.0;
    if (!im_s.empty()) {
      im = std::stod(im_s, &used);
      if (used != im_s.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::exception&) {
    throw ConfigError("cannot read complex number '" + text + "'; expected re or re,im");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot read number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

template <typename T>
T get_as(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", io::kOutputDigits, x);
  return buf;
}

struct Stats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

Stats summarize(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stderr_ = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return s;
}

fock::OracleOptions oracle_options(const ExperimentConfig& cfg, std::ostream& err) {
  fock::OracleOptions o = fock::OracleOptions::from_environment();
  o.strict = o.strict || cfg.strict;
  o.warn = [&err](const std::string& msg) {
    err << json{{"warning", msg}}.dump() << "\n";
  };
  return o;
}

std::string dump(const json& j) { return io::rounded(j).dump(2) + "\n"; }

// One sweep point or teleport-cv batch: outcomes drawn from the derived
// density, each run through the full protocol.
std::vector<cv::CVTeleportResult> sampled_runs(double g, cplx gamma, std::size_t n,
                                               std::uint64_t seed) {
  cv::CVTeleportConfig c;
  c.g = g;
  c.gamma = gamma;
  c.validate();
  const cv::OutcomeDensity density = cv::bell_measurement_density(gamma, c.q());
  RandomSource rng(seed);
  std::vector<cv::CVTeleportResult> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    c.fixed_outcome = density.sample(rng);
    out.push_back(cv::teleport_cv(c, rng));
  }
  return out;
}

std::string run_teleport_cv(const ExperimentConfig& cfg) {
  const double g = cfg.squeezing();
  std::vector<cv::CVTeleportResult> runs;
  if (cfg.outcome) {
    cv::CVTeleportConfig c;
    c.g = g;
    c.gamma = cfg.gamma;
    c.fixed_outcome = cfg.outcome;
    runs.push_back(cv::teleport_cv(c));
  } else {
    runs = sampled_runs(g, cfg.gamma, cfg.samples, *cfg.seed);
  }
  json records = json::array();
  std::vector<double> fid;
  std::vector<double> fid_norm;
  for (const auto& r : runs) {
    records.push_back(cv::to_json(r));
    fid.push_back(r.fidelity);
    fid_norm.push_back(r.fidelity_normalized);
  }
  const Stats s = summarize(fid);
  const Stats sn = summarize(fid_norm);
  json summary{{"n_runs", runs.size()},
               {"mean_fidelity", s.mean},
               {"stderr", s.stderr_},
               {"mean_fidelity_normalized", sn.mean},
               {"closed_form_mean_fidelity", (1.0 + std::tanh(g)) / (2.0 + std::tanh(g))}};
  json config{{"gamma", io::to_json(cfg.gamma)}, {"g", g}, {"q", std::tanh(g)}};
  if (cfg.outcome) config["outcome"] = io::to_json(*cfg.outcome);
  else {
    config["seed"] = *cfg.seed;
    config["samples"] = cfg.samples;
  }
  return dump(json{{"command", "teleport-cv"}, {"config", config}, {"records", records},
                   {"summary", summary}});
}

struct SweepRow {
  double g;
  double q;
  Stats stats;
  std::size_t n;
};

std::string run_sweep(const ExperimentConfig& cfg) {
  const std::size_t points = cfg.grid.size();
  std::vector<SweepRow> rows(points);
  auto work = [&](std::size_t i) {
    const auto runs = sampled_runs(cfg.grid[i], cfg.gamma, cfg.samples, *cfg.seed + i);
    std::vector<double> fid;
    for (const auto& r : runs) fid.push_back(r.fidelity);
    rows[i] = {cfg.grid[i], std::tanh(cfg.grid[i]), summarize(fid), runs.size()};
  };
  // Each point owns its seed and its slot, so the worker count cannot change
  // the output.
  const std::size_t workers = std::min(cfg.threads, points);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < points; i += workers) work(i);
    }));
  for (auto& j : jobs) j.get();

  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"g", r.g}, {"q", r.q}, {"gamma_re", cfg.gamma.real()},
                     {"gamma_im", cfg.gamma.imag()}, {"mean_fidelity", r.stats.mean},
                     {"stderr", r.stats.stderr_}, {"n_samples", r.n}});
    return dump(json{{"command", "sweep"}, {"seed", *cfg.seed}, {"rows", out}});
  }
  std::string csv = "g,q,gamma_re,gamma_im,mean_fidelity,stderr,n_samples\n";
  for (const auto& r : rows)
    csv += format_number(r.g) + "," + format_number(r.q) + "," + format_number(cfg.gamma.real()) +
           "," + format_number(cfg.gamma.imag()) + "," + format_number(r.stats.mean) + "," +
           format_number(r.stats.stderr_) + "," + std::to_string(r.n) + "\n";
  return csv;
}

std::string run_teleport_qubit(const ExperimentConfig& cfg) {
  CVector amps(2);
  amps << cfg.input[0], cfg.input[1];
  const qubit::QubitState input(amps.normalized());
  std::array<std::size_t, 4> counts{};
  double worst = 0.0;
  std::array<double, 4> probabilities{};
  std::size_t runs = 0;
  if (cfg.forced) {
    const auto r = qubit::teleport_qubit(input, cfg.forced);
    counts[2 * r.i + r.j] += 1;
    worst = std::abs(1.0 - r.fidelity);
    probabilities = r.probabilities;
    runs = 1;
  } else {
    RandomSource rng(*cfg.seed);
    for (std::size_t k = 0; k < cfg.shots; ++k) {
      const auto r = qubit::teleport_qubit(input, std::nullopt, &rng);
      counts[2 * r.i + r.j] += 1;
      worst = std::max(worst, std::abs(1.0 - r.fidelity));
      probabilities = r.probabilities;
    }
    runs = cfg.shots;
  }
  json input_json = json::array({io::to_json(input.amplitudes()(0)), io::to_json(input.amplitudes()(1))});
  json out{{"command", "teleport-qubit"},
           {"input", input_json},
           {"shots", runs},
           {"histogram", {{"00", counts[0]}, {"01", counts[1]}, {"10", counts[2]}, {"11", counts[3]}}},
           {"probabilities", probabilities},
           {"max_infidelity", worst}};
  if (cfg.forced) out["forced"] = *cfg.forced;
  else out["seed"] = *cfg.seed;
  return dump(out);
}

std::string run_kernel_dump(const ExperimentConfig& cfg) {
  const std::string& d = cfg.device;
  json params = json::object();
  auto form = [&]() -> core::GaussianForm {
    if (d == "identity") return core::identity_kernel(1);
    if (d == "displacement" || d == "coherent" || d == "bell") {
      params["alpha"] = io::to_json(cfg.alpha);
      if (d == "displacement") return devices::displacement_kernel(cfg.alpha);
      if (d == "coherent") return devices::coherent_state(cfg.alpha);
      return cv::generalized_bell(cfg.alpha);
    }
    if (d == "squeezer" || d == "squeezed_vacuum" || d == "epr") {
      const double g = cfg.squeezing();
      params["g"] = g;
      if (d == "squeezer") return devices::squeezer_kernel(g);
      if (d == "squeezed_vacuum") return devices::squeezed_vacuum(g);
      params["q"] = std::tanh(g);
      return cv::epr_state(std::tanh(g));
    }
    if (d == "beam_splitter") {
      params["theta"] = cfg.theta;
      return devices::beam_splitter(cfg.theta);
    }
    return devices::half_beam_splitter();
  }();
  return dump(json{{"command", "kernel-dump"}, {"device", d}, {"parameters", params},
                   {"form", io::to_json(form)}});
}

std::string run_oracle_check(const ExperimentConfig& cfg, std::ostream& err, bool& all_pass) {
  const auto checks = validation::run_oracle_suite(cfg.cutoff, oracle_options(cfg, err));
  json out = json::array();
  all_pass = true;
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"max_deviation", c.max_deviation},
                   {"tolerance", c.tolerance}, {"pass", c.pass()}});
    all_pass = all_pass && c.pass();
  }
  return dump(json{{"command", "oracle-check"}, {"cutoff", cfg.cutoff}, {"checks", out},
                   {"all_pass", all_pass}});
}

void emit_error(std::ostream& err, const std::string& name, const std::string& message) {
  err << json{{"error", name}, {"message", message}}.dump() << "\n";
}

}  // namespace

double ExperimentConfig::squeezing() const {
  if (g) return *g;
  if (q) return std::atanh(*q);
  return 1.0;
}

void ExperimentConfig::validate() const {
  if (!contains(kCommands, command))
    throw ConfigError("unknown command '" + command + "'; expected one of " + list(kCommands));
  auto finite = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(gamma) || !finite(alpha) || (outcome && !finite(*outcome)))
    throw ConfigError("complex parameters must be finite");
  if (g && (!std::isfinite(*g) || *g < 0.0)) throw ConfigError("g must be finite and ≥ 0");
  if (q && !(*q >= 0.0 && *q < 1.0)) throw ConfigError("q must lie in [0, 1)");
  if (g && q && std::abs(std::tanh(*g) - *q) > 1e-12)
    throw ConfigError("g and q are both given but q ≠ tanh g");
  if (!(std::tanh(squeezing()) < 1.0)) throw ConfigError("g is too large: tanh g rounds to 1");
  if (samples == 0) throw ConfigError("samples must be at least 1");
  if (shots == 0) throw ConfigError("shots must be at least 1");
  if (threads == 0) throw ConfigError("threads must be at least 1");
  if (cutoff < 1) throw ConfigError("cutoff must be at least 1");
  if (!std::isfinite(theta)) throw ConfigError("theta must be finite");
  if (command == "sweep") {
    if (grid.empty()) throw ConfigError("sweep grid is empty");
    for (double x : grid)
      if (!std::isfinite(x) || x < 0.0 || !(std::tanh(x) < 1.0))
        throw ConfigError("sweep grid values of g must be finite, ≥ 0 and below the tanh g = 1 limit");
  }
  if (!format.empty() && format != "json" && format != "csv")
    throw ConfigError("format must be json or csv");
  if (format == "csv" && command != "sweep") throw ConfigError("csv output exists only for sweep");
  if (input.size() != 2 || !finite(input[0]) || !finite(input[1]))
    throw ConfigError("input must hold two finite complex amplitudes");
  if (std::abs(std::sqrt(std::norm(input[0]) + std::norm(input[1])) - 1.0) > 1e-9)
    throw ConfigError("input amplitudes must have unit norm");
  if (forced && *forced > 3) throw ConfigError("forced outcome must be 0..3 (index 2i + j)");
  if (!contains(kDevices, device))
    throw ConfigError("unknown device '" + device + "'; expected one of " + list(kDevices));
  const bool samples_cv = (command == "teleport-cv" && !outcome) || command == "sweep";
  const bool samples_qubit = command == "teleport-qubit" && !forced;
  if ((samples_cv || samples_qubit) && !seed)
    throw ConfigError("a seed is required whenever outcomes are sampled");
}

void apply_json(ExperimentConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    try {
      if (key == "command") cfg.command = get_as<std::string>(doc, "command");
      else if (key == "gamma") cfg.gamma = io::complex_from_json(v);
      else if (key == "g") cfg.g = get_as<double>(doc, "g");
      else if (key == "q") cfg.q = get_as<double>(doc, "q");
      else if (key == "seed") cfg.seed = get_as<std::uint64_t>(doc, "seed");
      else if (key == "samples") cfg.samples = get_as<std::size_t>(doc, "samples");
      else if (key == "grid") cfg.grid = get_as<std::vector<double>>(doc, "grid");
      else if (key == "outcome") cfg.outcome = io::complex_from_json(v);
      else if (key == "cutoff") cfg.cutoff = get_as<std::size_t>(doc, "cutoff");
      else if (key == "strict") cfg.strict = get_as<bool>(doc, "strict");
      else if (key == "output") cfg.output = get_as<std::string>(doc, "output");
      else if (key == "format") cfg.format = get_as<std::string>(doc, "format");
      else if (key == "threads") cfg.threads = get_as<std::size_t>(doc, "threads");
      else if (key == "shots") cfg.shots = get_as<std::size_t>(doc, "shots");
      else if (key == "forced") cfg.forced = get_as<std::size_t>(doc, "forced");
      else if (key == "device") cfg.device = get_as<std::string>(doc, "device");
      else if (key == "alpha") cfg.alpha = io::complex_from_json(v);
      else if (key == "theta") cfg.theta = get_as<double>(doc, "theta");
      else if (key == "input") {
        if (!v.is_array()) throw ConfigError("input must be a list of two complex amplitudes");
        cfg.input.clear();
        for (const auto& z : v) cfg.input.push_back(io::complex_from_json(z));
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

const std::string& field_reference() {
  static const std::string text = R"(Config keys (JSON file via --config; flags override the file):
  gamma     input coherent amplitude, [re, im] or number        (default [0.5, 0])
  g         squeezing parameter g >= 0                           (default 1)
  q         tanh g, 0 <= q < 1; alternative to g
  seed      unsigned integer; required whenever outcomes are sampled
  samples   teleport-cv runs / sweep samples per grid point      (default 1000)
  grid      list of g values for sweep                           (default [0.5, 1, 1.5])
  outcome   fixed Bell outcome alpha = x + ip, [re, im]; skips sampling
  cutoff    Fock cutoff for oracle-check                         (default 40)
  strict    true turns Fock cutoff warnings into errors; BARGMANN_STRICT=1 does the same
  output    output file; stdout when empty
  format    json or csv (csv only for sweep, its default)
  threads   sweep worker threads; output does not depend on it  (default 1)
  input     teleport-qubit amplitudes [[re, im], [re, im]]       (default [0.6, 0.8])
  shots     teleport-qubit runs                                  (default 1000)
  forced    teleport-qubit forced outcome m = 2i + j in 0..3
  device    kernel-dump: identity, displacement, coherent, squeezer, squeezed_vacuum,
            beam_splitter, half_beam_splitter, epr, bell
  alpha     kernel-dump amplitude for displacement, coherent, bell (default [0.5, 0])
  theta     kernel-dump beam-splitter angle in radians          (default pi/4)

Output fields:
  teleport-cv (JSON)
    config        gamma, g, q and either outcome or seed and samples
    records[]     gamma [re, im]; g; q = tanh g; x_minus, p_plus: Bell outcome alpha;
                  fidelity: |<gamma|phi>| with phi = sum q^n D(alpha)|n><n|D(alpha)^+|gamma>
                  left unnormalized; fidelity_normalized: the same with phi normalized
    summary       n_runs, mean_fidelity, stderr (of the mean), mean_fidelity_normalized,
                  closed_form_mean_fidelity = (1 + q)/(2 + q)
  sweep (CSV, or JSON rows with the same names)
    g, q, gamma_re, gamma_im, mean_fidelity, stderr, n_samples; point i uses seed + i
  teleport-qubit (JSON)
    input, shots, seed or forced, histogram {"00","01","10","11"} of outcomes (i, j),
    probabilities p(ij) from the projectors, max_infidelity = max |1 - |<in|out>||
  kernel-dump (JSON)
    device, parameters, form {n_in, n_out, A (row-major [re, im]), b, c, delta_normalized}
    for c * exp(1/2 z^T A z + b^T z), z = (v_1..v_n_in, ubar_1..ubar_n_out)
  oracle-check (JSON)
    cutoff, checks[] {name, max_deviation, tolerance, pass}, all_pass

Numbers are written with 12 significant digits. Errors go to stderr as
{"error": <name>, "message": <text>} with a nonzero exit status.)";
  return text;
}

std::optional<ExperimentConfig> parse_arguments(int argc, const char* const* argv) {
  CLI::App app{"Teleportation simulations in the holomorphic representation", "bargmann"};
  app.footer(field_reference());
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> given;
  std::map<std::string, bool> switches;
  const std::vector<std::pair<std::string, std::string>> value_flags{
      {"gamma", "input coherent amplitude re[,im]"},
      {"g", "squeezing parameter"},
      {"q", "tanh g"},
      {"seed", "random seed"},
      {"samples", "runs / samples per point"},
      {"grid", "comma-separated g values for sweep"},
      {"outcome", "fixed Bell outcome re[,im]"},
      {"cutoff", "Fock cutoff"},
      {"output", "output file"},
      {"format", "json or csv"},
      {"threads", "sweep worker threads"},
      {"input", "qubit amplitudes re0,im0,re1,im1"},
      {"shots", "qubit runs"},
      {"forced", "forced qubit outcome 0..3"},
      {"device", "kernel-dump device"},
      {"alpha", "kernel-dump amplitude re[,im]"},
      {"theta", "beam-splitter angle"},
  };
  std::vector<CLI::App*> subs;
  const std::map<std::string, std::string> about{
      {"teleport-cv", "continuous-variable teleportation of a coherent state"},
      {"teleport-qubit", "three-qubit teleportation circuit"},
      {"sweep", "mean fidelity over a grid of squeezing values (CSV)"},
      {"kernel-dump", "print a device kernel or state as JSON"},
      {"oracle-check", "cross-check the symbolic engine against the Fock oracle"}};
  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--config", config_path, "JSON config file");
    for (const auto& [flag, help] : value_flags) {
      std::string dashed = flag;
      std::replace(dashed.begin(), dashed.end(), '_', '-');
      sub->add_option("--" + dashed, given[flag], help);
    }
    sub->add_flag("--strict", switches["strict"], "cutoff warnings become errors");
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  ExperimentConfig cfg;
  for (CLI::App* sub : subs)
    if (sub->parsed()) cfg.command = sub->get_name();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config file '" + config_path + "': " + e.what());
    }
    if (doc.contains("command") && doc["command"] != cfg.command)
      throw ConfigError("config file command does not match the subcommand");
    apply_json(cfg, doc);
  }
  CLI::App* active = nullptr;
  for (CLI::App* sub : subs)
    if (sub->parsed()) active = sub;
  auto was_given = [&](const std::string& flag) {
    std::string dashed = flag;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    return active->count("--" + dashed) > 0;
  };
  auto number = [](const std::string& s, const char* what) {
    const auto v = parse_list(s);
    if (v.size() != 1) throw ConfigError(std::string(what) + " expects one number");
    return v[0];
  };
  auto whole = [&](const std::string& s, const char* what) -> std::uint64_t {
    const double v = number(s, what);
    if (v < 0 || v != std::floor(v)) throw ConfigError(std::string(what) + " must be a whole number");
    return static_cast<std::uint64_t>(v);
  };
  if (was_given("gamma")) cfg.gamma = parse_complex(given["gamma"]);
  if (was_given("g")) cfg.g = number(given["g"], "--g");
  if (was_given("q")) cfg.q = number(given["q"], "--q");
  if (was_given("seed")) cfg.seed = whole(given["seed"], "--seed");
  if (was_given("samples")) cfg.samples = whole(given["samples"], "--samples");
  if (was_given("grid")) cfg.grid = parse_list(given["grid"]);
  if (was_given("outcome")) cfg.outcome = parse_complex(given["outcome"]);
  if (was_given("cutoff")) cfg.cutoff = whole(given["cutoff"], "--cutoff");
  if (was_given("output")) cfg.output = given["output"];
  if (was_given("format")) cfg.format = given["format"];
  if (was_given("threads")) cfg.threads = whole(given["threads"], "--threads");
  if (was_given("shots")) cfg.shots = whole(given["shots"], "--shots");
  if (was_given("forced")) cfg.forced = whole(given["forced"], "--forced");
  if (was_given("device")) cfg.device = given["device"];
  if (was_given("alpha")) cfg.alpha = parse_complex(given["alpha"]);
  if (was_given("theta")) cfg.theta = number(given["theta"], "--theta");
  if (was_given("input")) {
    const auto v = parse_list(given["input"]);
    if (v.size() != 4) throw ConfigError("--input expects re0,im0,re1,im1");
    cfg.input = {{v[0], v[1]}, {v[2], v[3]}};
  }
  if (switches["strict"]) cfg.strict = true;
  return cfg;
}

int run(const ExperimentConfig& cfg_in, std::ostream& out, std::ostream& err) {
  try {
    ExperimentConfig cfg = cfg_in;
    cfg.validate();
    if (cfg.format.empty()) cfg.format = cfg.command == "sweep" ? "csv" : "json";
    std::string artifact;
    bool ok = true;
    if (cfg.command == "teleport-cv") artifact = run_teleport_cv(cfg);
    else if (cfg.command == "sweep") artifact = run_sweep(cfg);
    else if (cfg.command == "teleport-qubit") artifact = run_teleport_qubit(cfg);
    else if (cfg.command == "kernel-dump") artifact = run_kernel_dump(cfg);
    else artifact = run_oracle_check(cfg, err, ok);
    if (cfg.output.empty()) {
      out << artifact;
    } else {
      std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
      if (!file) throw ConfigError("cannot write output file '" + cfg.output + "'");
      file << artifact;
    }
    return ok ? 0 : 1;
  } catch (const ConfigError& e) {
    emit_error(err, e.name(), e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, e.name(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 1;
  }
}

int main_entry(int argc, const char* const* argv) {
  try {
    const auto cfg = parse_arguments(argc, argv);
    if (!cfg) return 0;
    return run(*cfg, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    emit_error(std::cerr, e.name(), e.what());
    return 2;
  }
}

}  // namespace bargmann::cli
