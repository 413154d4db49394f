#include "rvert/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>

namespace rvert {

namespace {

std::atomic<int> thread_cap{0};

int env_thread_cap() {
  static const int cached = [] {
    const char* s = std::getenv("RV_THREADS");
    if (!s) return 0;
    const int v = std::atoi(s);
    return v > 0 ? v : 0;
  }();
  return cached;
}

}  // namespace

int kernel_threads() {
#if defined(_OPENMP)
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const int env = env_thread_cap(); env > 0) n = std::min(n, env);
  if (const int cap = thread_cap.load(); cap > 0) n = std::min(n, cap);
  return std::max(1, n);
}

void set_thread_cap(int cap) { thread_cap.store(cap < 1 ? 0 : cap); }

std::vector<double> uniform_grid(double period, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = grid_point(period, i, n);
  return ts;
}

namespace detail {

void run_indexed(std::size_t n, ExecPolicy policy, const std::function<void(std::size_t)>& body) {
#if defined(_OPENMP)
  if (policy == ExecPolicy::parallel && n >= 2) {
    std::exception_ptr first_error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(static) num_threads(kernel_threads())
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

std::vector<CurvatureSample> sample_curvature(const RadialDensity& d, const Curve& c,
                                              std::size_t n, ExecPolicy policy) {
  std::vector<CurvatureSample> out(n);
  const double period = c.period();
  detail::run_indexed(n, policy, [&](std::size_t i) {
    out[i] = curvature_sample(d, c, grid_point(period, i, n));
  });
  return out;
}

std::vector<double> sample_k_phi(const RadialDensity& d, const Curve& c, std::size_t n,
                                 ExecPolicy policy) {
  std::vector<double> out(n);
  map_grid(c.period(), n, policy, [&](double t) { return phi_curvature(d, c, t); }, out.data());
  return out;
}

std::function<double(double)> dk_dt_evaluator(const RadialDensity& d, const Curve& c,
                                              DkPath path) {
  if (path == DkPath::finite_difference)
    return [d, c](double t) { return dk_phi_dt_fd(d, c, t); };
  if (path == DkPath::auto_closed_form) {
    if (auto circle = c.as_circle())
      return [d, circ = *circle](double t) { return circle_dk_dt(d, circ, t); };
  }
  return [d, c](double t) { return dk_phi_dt_numeric(d, c, t); };
}

std::function<double(double)> k_phi_evaluator(const RadialDensity& d, const Curve& c,
                                              DkPath path) {
  if (path == DkPath::auto_closed_form) {
    if (auto circle = c.as_circle())
      return [d, circ = *circle](double t) { return circle_phi_curvature(d, circ, t); };
  }
  return [d, c](double t) { return phi_curvature(d, c, t); };
}

std::vector<double> sample_dk_dt(const RadialDensity& d, const Curve& c, std::size_t n,
                                 DkPath path, ExecPolicy policy) {
  std::vector<double> out(n);
  const auto eval = dk_dt_evaluator(d, c, path);
  map_grid(c.period(), n, policy, [&](double t) { return eval(t); }, out.data());
  return out;
}

}  // namespace rvert
