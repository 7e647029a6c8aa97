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

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace bargmann {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using SparseCMatrix = Eigen::SparseMatrix<cplx>;

inline constexpr cplx kI{0.0, 1.0};

namespace linalg {

/// Matrix exponential by scaling and squaring with a diagonal Padé
/// approximant of degree 3, 5, 7, 9 or 13 chosen from the 1-norm.
/// Throws NumericalFailure when the result has non-finite entries.
CMatrix expm(const CMatrix& a);

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const CMatrix& m);

/// 2-norm condition number from singular values (inf when singular).
double condition_number(const CMatrix& m);

inline CMatrix symmetrized(const CMatrix& m) { return (m + m.transpose()) / 2.0; }

}  // namespace linalg
}  // namespace bargmann
