/*
   Copyright 2026 The hullwalk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cmath>

#include "hullwalk/error.hpp"

namespace hullwalk::detail {

template <class F> class AdaptiveSimpson {
public:
  AdaptiveSimpson(F f, double tolerance, int max_depth)
      : f_(f), tolerance_(tolerance), max_depth_(max_depth) {}

  double integrate(double a, double b) {
    const double fa = f_(a), fb = f_(b), fm = f_(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, tolerance_, max_depth_);
  }

private:
  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f_(lm), frm = f_(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) {
      return left + right + delta / 15.0;
    }
    if (depth <= 0) {
      throw ResourceError("quadrature did not converge");
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }

  F f_;
  double tolerance_;
  int max_depth_;
};

/// Adaptive Simpson quadrature with absolute tolerance; throws ResourceError
/// when the recursion depth is exhausted.
template <class F>
double adaptive_simpson(F f, double a, double b, double tolerance, int max_depth = 40) {
  // Start from a few panels so that narrow features are not missed.
  constexpr int panels = 8;
  const double h = (b - a) / panels;
  double total = 0.0;
  AdaptiveSimpson<F> q(f, tolerance / panels, max_depth);
  for (int i = 0; i < panels; ++i) {
    total += q.integrate(a + i * h, a + (i + 1) * h);
  }
  return total;
}

} // namespace hullwalk::detail
