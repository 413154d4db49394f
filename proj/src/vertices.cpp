#include "rvert/vertices.hpp"

#include <algorithm>
#include <cmath>

#include "rvert/rootfind.hpp"

namespace rvert {

namespace {

double wrap_param(double t, double period) {
  t = std::fmod(t, period);
  if (t < 0.0) t += period;
  return t;
}

// merge a sorted root list whose entries within tol are one vertex; the list
// wraps, so a cluster may straddle 0
std::vector<double> merge_roots(std::vector<double> roots, double period, double tol) {
  if (roots.empty()) return roots;
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i + 1;
    double sum = roots[i];
    while (j < roots.size() && roots[j] - roots[j - 1] <= tol) {
      sum += roots[j];
      ++j;
    }
    merged.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  // wrap-around cluster: last and first within tol across the seam
  if (merged.size() > 1 && (merged.front() + period - merged.back()) <= tol) {
    const double avg = wrap_param(0.5 * (merged.front() + merged.back() - period), period);
    merged.erase(merged.begin());
    merged.pop_back();
    merged.push_back(avg);
    std::sort(merged.begin(), merged.end());
  }
  return merged;
}

}  // namespace

VertexReport find_vertices(const RadialDensity& d, const Curve& c, const VertexOptions& options) {
  const double period = c.period();
  const std::size_t n = options.grid_size;
  const double merge_tol = options.merge_tol_factor * period;
  const double refine_tol = options.refine_tol_factor * period;

  const auto k_eval = k_phi_evaluator(d, c, options.dk_path);
  const auto g_eval = dk_dt_evaluator(d, c, options.dk_path);

  std::vector<double> k_phi(n), g(n);
  map_grid(period, n, options.policy, [&](double t) { return k_eval(t); }, k_phi.data());
  map_grid(period, n, options.policy, [&](double t) { return g_eval(t); }, g.data());

  VertexReport report;
  report.grid_size = n;
  report.merge_tol = merge_tol;
  report.refine_tol = refine_tol;

  double k_min = k_phi[0], k_max = k_phi[0], k_sum = 0.0;
  for (double v : k_phi) {
    k_min = std::min(k_min, v);
    k_max = std::max(k_max, v);
    k_sum += v;
  }
  const double k_mean = k_sum / static_cast<double>(n);
  if (k_max - k_min < 1e-9 * (1.0 + std::abs(k_mean))) {
    report.status = VertexStatus::constant_curvature;
    report.count = -1;
    return report;
  }
  report.status = VertexStatus::discrete;

  double scale = 0.0;
  for (double v : g) scale = std::max(scale, std::abs(v));

  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double ti = grid_point(period, i, n);
    const double tj = (j == 0) ? period : grid_point(period, j, n);
    if (g[i] == 0.0) {
      roots.push_back(ti);
      continue;
    }
    if (g[j] == 0.0) continue;  // captured as that node's own exact zero
    if ((g[i] < 0.0) != (g[j] < 0.0)) {
      roots.push_back(bisect_root(g_eval, ti, tj, g[i], g[j], refine_tol));
    }
  }
  for (double& t : roots) t = wrap_param(t, period);
  roots = merge_roots(std::move(roots), period, merge_tol);

  // tangential candidates: grid-local minima of |g| that are nearly zero but
  // never change sign, away from the roots already found
  if (scale > 0.0) {
    std::vector<double> extra;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const std::size_t next = (i + 1) % n;
      const double gi = std::abs(g[i]);
      if (gi >= 1e-8 * scale) continue;
      if (gi > std::abs(g[prev]) || gi > std::abs(g[next])) continue;
      if (g[i] == 0.0) continue;  // already a root
      if ((g[prev] < 0.0) != (g[next] < 0.0)) continue;  // sign change: bracketed above
      const double ti = grid_point(period, i, n);
      bool near_existing = false;
      for (double root : roots) {
        double gap = std::abs(root - ti);
        gap = std::min(gap, period - gap);
        if (gap <= period / static_cast<double>(n) + merge_tol) near_existing = true;
      }
      if (near_existing) continue;
      const double h = period / static_cast<double>(n);
      extra.push_back(wrap_param(
          golden_section_min([&](double t) { return std::abs(g_eval(t)); }, ti - h, ti + h,
                             refine_tol),
          period));
    }
    if (!extra.empty()) {
      roots.insert(roots.end(), extra.begin(), extra.end());
      roots = merge_roots(std::move(roots), period, merge_tol);
    }
  }

  const double probe = 0.5 * merge_tol;
  for (double t : roots) {
    const double before = g_eval(t - probe);
    const double after = g_eval(t + probe);
    VertexKind kind = VertexKind::tangential;
    if (before > 0.0 && after < 0.0) kind = VertexKind::local_max;
    else if (before < 0.0 && after > 0.0) kind = VertexKind::local_min;
    report.vertices.push_back({t, c.position(t), k_eval(t), kind});
  }
  report.count = static_cast<int>(report.vertices.size());
  return report;
}

int count_vertices(const RadialDensity& d, const Curve& c, const VertexOptions& options) {
  return find_vertices(d, c, options).count;
}

bool check_four_vertex(const VertexReport& report) {
  return report.status == VertexStatus::constant_curvature || report.count >= 4;
}

}  // namespace rvert
