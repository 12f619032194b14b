// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>

namespace evtrate {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Secant iteration safeguarded by bisection on a sign-change bracket.
///
/// Requires fa and fb of opposite sign. Stops once |f(x)| <= ftol or the
/// bracket can no longer be split in floating point; in the latter case the
/// endpoint with the smaller residual is returned with converged = false.
template <typename F>
RootResult find_root_bracketed(F&& f, double a, double b, double fa, double fb,
                               double ftol, int max_iter = 400) {
  RootResult r;
  if (std::abs(fa) <= ftol) return {a, fa, 0, true};
  if (std::abs(fb) <= ftol) return {b, fb, 0, true};
  if (a > b) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  // Previous iterate for the secant step; starts as the bracket ends.
  double x0 = a, f0 = fa, x1 = b, f1 = fb;
  for (int it = 0; it < max_iter; ++it) {
    double x = 0.5 * (a + b);
    if (f1 != f0) {
      const double s = x1 - f1 * (x1 - x0) / (f1 - f0);
      // Accept the secant step only if it lands well inside the bracket.
      const double margin = 1e-3 * (b - a);
      if (s > a + margin && s < b - margin) x = s;
    }
    if (!(x > a && x < b)) break;
    const double fx = f(x);
    ++r.evaluations;
    if (std::abs(fx) <= ftol) return {x, fx, r.evaluations, true};
    // Shrink the bracket; force a bisection next time if the secant point
    // barely moved one side.
    const double width = b - a;
    if ((fx < 0) == (fa < 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    x0 = x1;
    f0 = f1;
    x1 = x;
    f1 = fx;
    if (b - a > 0.5 * width) {
      const double m = 0.5 * (a + b);
      if (!(m > a && m < b)) break;
      const double fm = f(m);
      ++r.evaluations;
      if (std::abs(fm) <= ftol) return {m, fm, r.evaluations, true};
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
        fb = fm;
      }
    }
  }
  r.converged = false;
  if (std::abs(fa) < std::abs(fb)) {
    r.x = a;
    r.fx = fa;
  } else {
    r.x = b;
    r.fx = fb;
  }
  return r;
}

}  // namespace evtrate
