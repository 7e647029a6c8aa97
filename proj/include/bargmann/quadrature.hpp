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

#include <functional>

#include "bargmann/linalg.hpp"

namespace bargmann::quadrature {

/// Adaptive Simpson integration of a vector-valued function over [lo, hi].
/// The range is first cut into `panels` equal pieces; each piece is refined
/// until the Richardson estimate falls below its share of tol (max-norm).
/// Throws NumericalFailure when max_depth is hit without converging.
CVector adaptive_simpson(const std::function<CVector(double)>& f, double lo, double hi,
                         double tol, int panels = 64, int max_depth = 40);

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol,
                        int panels = 64, int max_depth = 40);

}  // namespace bargmann::quadrature
