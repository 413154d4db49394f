#pragma once

#include <functional>

namespace rvert {

/// Adaptive Gauss-Kronrod (7-15 pair) integration of f over [a, b] to the given
/// absolute tolerance. Handles a > b by sign reversal.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10);

}  // namespace rvert
