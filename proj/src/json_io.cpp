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

#include "bargmann/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann::io {

double round_output(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return std::strtod(buf, nullptr);
}

json rounded(const json& j) {
  if (j.is_number_float()) return round_output(j.get<double>());
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(rounded(v));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = rounded(it.value());
    return out;
  }
  return j;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("expected a complex number as [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const core::GaussianForm& f) {
  json a = json::array();
  for (Eigen::Index i = 0; i < f.a().rows(); ++i)
    for (Eigen::Index k = 0; k < f.a().cols(); ++k) a.push_back(to_json(f.a()(i, k)));
  json b = json::array();
  for (Eigen::Index i = 0; i < f.b().size(); ++i) b.push_back(to_json(f.b()(i)));
  return json{{"n_in", f.n_in()},
              {"n_out", f.n_out()},
              {"A", a},
              {"b", b},
              {"c", to_json(f.c())},
              {"delta_normalized", f.is_delta_normalized()}};
}

core::GaussianForm form_from_json(const json& j) {
  try {
    const auto n_in = j.at("n_in").get<std::size_t>();
    const auto n_out = j.at("n_out").get<std::size_t>();
    const auto n = static_cast<Eigen::Index>(n_in + n_out);
    const json& ja = j.at("A");
    const json& jb = j.at("b");
    if (ja.size() != static_cast<std::size_t>(n * n) || jb.size() != static_cast<std::size_t>(n))
      throw ConfigError("form JSON: A or b has the wrong length");
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) a(i, k) = complex_from_json(ja[i * n + k]);
    CVector b(n);
    for (Eigen::Index i = 0; i < n; ++i) b(i) = complex_from_json(jb[i]);
    return core::GaussianForm(n_in, n_out, a, b, complex_from_json(j.at("c")),
                              j.value("delta_normalized", false));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("form JSON: ") + e.what());
  }
}

}  // namespace bargmann::io
