#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <utility>
#include <vector>

#include "rvert/curvature.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rvert {

/// Grid kernels run either serially (the reference implementation, kept for
/// testing and benchmarking) or OpenMP-parallel. Every element is computed
/// independently and written to its own slot, so results are bitwise identical
/// for any thread count.
enum class ExecPolicy { serial, parallel };

/// Number of threads parallel kernels may use: OpenMP's maximum, capped by the
/// RV_THREADS environment variable (read once) and by set_thread_cap().
int kernel_threads();

/// Caps kernel_threads() at the given value (values < 1 reset to no cap).
void set_thread_cap(int cap);

/// Parameters of the i-th point of an n-point uniform grid over one period.
inline double grid_point(double period, std::size_t i, std::size_t n) {
  return period * static_cast<double>(i) / static_cast<double>(n);
}

std::vector<double> uniform_grid(double period, std::size_t n);

namespace detail {
void run_indexed(std::size_t n, ExecPolicy policy, const std::function<void(std::size_t)>& body);
}

/// out[i] = f(t_i) over the uniform n-point grid of [0, period).
template <class F>
void map_grid(double period, std::size_t n, ExecPolicy policy, F&& f, double* out) {
  detail::run_indexed(n, policy,
                      [&](std::size_t i) { out[i] = f(grid_point(period, i, n)); });
}

/// Curvature quantities over the uniform grid (one CurvatureSample per point).
std::vector<CurvatureSample> sample_curvature(const RadialDensity& d, const Curve& c,
                                              std::size_t n,
                                              ExecPolicy policy = ExecPolicy::parallel);

/// k_phi over the uniform grid.
std::vector<double> sample_k_phi(const RadialDensity& d, const Curve& c, std::size_t n,
                                 ExecPolicy policy = ExecPolicy::parallel);

/// Which evaluator find_vertices and the sampling kernels use for dk_phi/dt.
enum class DkPath {
  auto_closed_form,   // circle closed form when available, else analytic/FD
  generic,            // always the generic-curve path
  finite_difference,  // always the five-point difference
};

/// Callable evaluating dk_phi/dt along the chosen path; shared by grid
/// sampling and by root refinement so both see the same function.
std::function<double(double)> dk_dt_evaluator(const RadialDensity& d, const Curve& c,
                                              DkPath path = DkPath::auto_closed_form);

/// Matching evaluator for k_phi (closed form on circles along the same path).
std::function<double(double)> k_phi_evaluator(const RadialDensity& d, const Curve& c,
                                              DkPath path = DkPath::auto_closed_form);

/// dk_phi/dt over the uniform grid along the chosen path.
std::vector<double> sample_dk_dt(const RadialDensity& d, const Curve& c, std::size_t n,
                                 DkPath path = DkPath::auto_closed_form,
                                 ExecPolicy policy = ExecPolicy::parallel);

}  // namespace rvert
