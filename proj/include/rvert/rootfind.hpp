#pragma once

#include <cmath>

namespace rvert {

/// Bisection on [a, b] with f(a), f(b) of opposite sign; returns the midpoint of
/// the final bracket once it is narrower than tol.
template <class F>
double bisect_root(F&& f, double a, double b, double fa, double fb, double tol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket at rounding resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

/// Golden-section minimization of a unimodal f on [a, b] to parameter tolerance tol.
template <class F>
double golden_section_min(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    if (x1 >= x2) break;  // rounding resolution
  }
  return 0.5 * (a + b);
}

}  // namespace rvert
