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

#include "bargmann/quadrature.hpp"

#include <cmath>

#include "bargmann/errors.hpp"

namespace bargmann::quadrature {
namespace {

struct Refiner {
  const std::function<CVector(double)>& f;
  int max_depth;

  CVector refine(double a, double b, const CVector& fa, const CVector& fm, const CVector& fb,
                 const CVector& whole, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const CVector flm = f(lm);
    const CVector frm = f(rm);
    const CVector left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const CVector right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const CVector delta = left + right - whole;
    const double err = delta.size() == 0 ? 0.0 : delta.cwiseAbs().maxCoeff();
    if (err <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth)
      throw NumericalFailure("adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]");
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

CVector adaptive_simpson(const std::function<CVector(double)>& f, double lo, double hi,
                         double tol, int panels, int max_depth) {
  if (!(hi > lo) || panels < 1 || !(tol > 0.0))
    throw InvalidArgument("adaptive Simpson: need lo < hi, tol > 0 and at least one panel");
  const Refiner r{f, max_depth};
  const double h = (hi - lo) / panels;
  CVector fa = f(lo);
  CVector total = CVector::Zero(fa.size());
  for (int k = 0; k < panels; ++k) {
    const double a = lo + k * h;
    const double b = k + 1 == panels ? hi : lo + (k + 1) * h;
    const CVector fm = f(0.5 * (a + b));
    const CVector fb = f(b);
    const CVector whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += r.refine(a, b, fa, fm, fb, whole, tol / panels, 0);
    fa = fb;
  }
  return total;
}

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol,
                        int panels, int max_depth) {
  const std::function<CVector(double)> g = [&f](double x) {
    return CVector::Constant(1, cplx(f(x), 0.0));
  };
  return adaptive_simpson(g, lo, hi, tol, panels, max_depth)(0).real();
}

}  // namespace bargmann::quadrature
