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

#include "bargmann/linalg.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "bargmann/errors.hpp"

namespace bargmann::linalg {
namespace {

// Higham (2005) thresholds on the 1-norm for each Padé degree.
constexpr std::array<double, 4> kTheta{1.495585217958292e-2, 2.539398330063230e-1,
                                       9.504178996162932e-1, 2.097847961257068e0};
constexpr double kTheta13 = 5.371920351148152e0;

constexpr std::array<double, 4> kB3{120., 60., 12., 1.};
constexpr std::array<double, 6> kB5{30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kB7{17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
constexpr std::array<double, 10> kB9{17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                                     2162160.,     110880.,      3960.,       90.,         1.};
constexpr std::array<double, 14> kB13{64764752532480000., 32382376266240000., 7771770303897600.,
                                      1187353796428800.,  129060195264000.,   10559470521600.,
                                      670442572800.,      33522128640.,       1323241920.,
                                      40840800.,          960960.,            16380.,
                                      182.,               1.};

template <std::size_t N>
CMatrix pade_low(const CMatrix& a, const std::array<double, N>& b) {
  const auto n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  CMatrix power = id;
  CMatrix u_inner = CMatrix::Zero(n, n);
  CMatrix v = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < N; k += 2) {
    v += b[k] * power;
    u_inner += b[k + 1] * power;
    power = power * a2;
  }
  const CMatrix u = a * u_inner;
  return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade13(const CMatrix& a) {
  const auto& b = kB13;
  const auto n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const CMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                         b[3] * a2 + b[1] * id);
  const CMatrix v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

CMatrix expm(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("expm: matrix is not square");
  if (a.size() == 0) return a;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm1)) throw NumericalFailure("expm: non-finite input");

  CMatrix result;
  if (norm1 <= kTheta[0]) {
    result = pade_low(a, kB3);
  } else if (norm1 <= kTheta[1]) {
    result = pade_low(a, kB5);
  } else if (norm1 <= kTheta[2]) {
    result = pade_low(a, kB7);
  } else if (norm1 <= kTheta[3]) {
    result = pade_low(a, kB9);
  } else {
    const int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta13))));
    result = pade13(a / std::ldexp(1.0, s));
    for (int i = 0; i < s; ++i) result = result * result;
  }
  if (!result.allFinite()) throw NumericalFailure("expm: non-finite result");
  return result;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double condition_number(const CMatrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

}  // namespace bargmann::linalg
