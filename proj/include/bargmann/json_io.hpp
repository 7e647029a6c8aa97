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

#include <json.hpp>

#include "bargmann/gaussian_form.hpp"
#include "bargmann/linalg.hpp"

namespace bargmann::io {

using json = nlohmann::json;

/// Significant digits used for every number written by the tools.
inline constexpr int kOutputDigits = 12;

/// x rounded to kOutputDigits significant digits.
double round_output(double x);

/// Copy of j with every floating-point number passed through round_output.
json rounded(const json& j);

json to_json(cplx z);
cplx complex_from_json(const json& j);

/// {n_in, n_out, A (row-major list of [re, im]), b, c, delta_normalized}
json to_json(const core::GaussianForm& f);
core::GaussianForm form_from_json(const json& j);

}  // namespace bargmann::io
