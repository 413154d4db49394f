#include "rvert/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rvert {

GaussTwoVertexExample make_gauss_counterexample(double b) {
  if (b == 0.0)
    fail(Errc::degenerate,
         "b = 0 gives a circle about the origin with constant curvature, not two vertices");
  return {RadialDensity::gaussian(), Circle{std::abs(b), 1.0}, std::abs(b)};
}

ForcedVertexConstruction force_vertex_count(double R, double b, int n,
                                            std::optional<std::vector<double>> roots, double c1,
                                            double c2, const VertexOptions& options) {
  RadialDensity density = build_vertex_forcing(R, b, n, std::move(roots), c1, c2);
  const Circle circle{b, R};

  std::vector<double> predicted = {0.5 * std::numbers::pi, 1.5 * std::numbers::pi};
  for (double root : density.params().roots) {
    const double s = (root * root - R * R - b * b) / (2.0 * R * b);
    const double base = std::asin(s);
    const double t1 = base >= 0.0 ? base : base + two_pi;
    const double t2 = std::numbers::pi - base;
    predicted.push_back(t1);
    predicted.push_back(t2);
  }
  std::sort(predicted.begin(), predicted.end());

  VertexReport report = find_vertices(density, circle_curve(circle), options);
  ForcedVertexConstruction out{std::move(density), circle, std::move(predicted),
                               std::move(report)};
  if (out.report.count != 2 * n) {
    std::ostringstream msg;
    msg << "vertex-forcing construction expected " << 2 * n << " vertices, found "
        << out.report.count;
    fail(Errc::verification, msg.str());
  }
  return out;
}

ConstantCurvatureConstruction make_constant_curvature_density(double R, double b, double c1,
                                                              double c2) {
  RadialDensity density = build_log_family(R, b, c1, c2);
  const Circle circle{b, R};
  double k_min = 0.0, k_max = 0.0;
  for (std::size_t i = 0; i < 4096; ++i) {
    const double k = circle_phi_curvature(density, circle, grid_point(two_pi, i, 4096));
    if (i == 0) {
      k_min = k_max = k;
    } else {
      k_min = std::min(k_min, k);
      k_max = std::max(k_max, k);
    }
  }
  const double spread = k_max - k_min;
  if (!(spread < 1e-10)) {
    std::ostringstream msg;
    msg << "log-family curvature spread " << spread << " exceeds 1e-10";
    fail(Errc::verification, msg.str());
  }
  return {std::move(density), circle, (1.0 + c1) / R, spread};
}

namespace {

struct IntervalBounds {
  bool sign_constant;
  double min_abs_dphi;
  double max_abs_d2phi;
};

IntervalBounds sample_interval(const RadialDensity& d, double b, double eps, bool positive) {
  constexpr std::size_t samples = 1025;
  IntervalBounds out{true, std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < samples; ++i) {
    const double r =
        (b - eps) + 2.0 * eps * static_cast<double>(i) / static_cast<double>(samples - 1);
    const DensityValue v = d.eval(r);
    if (positive ? (v.dphi <= 0.0) : (v.dphi >= 0.0)) {
      out.sign_constant = false;
      return out;
    }
    out.min_abs_dphi = std::min(out.min_abs_dphi, std::abs(v.dphi));
    out.max_abs_d2phi = std::max(out.max_abs_d2phi, std::abs(v.d2phi));
  }
  return out;
}

}  // namespace

CounterexampleCertificate find_two_vertex_circle(const RadialDensity& d, double b) {
  if (!(b > 0.0)) fail(Errc::domain, "witness radius b must be positive");
  const double dphi_b = d.eval(b).dphi;
  if (std::abs(dphi_b) < 1e-12)
    fail(Errc::not_applicable, "phi'(b) vanishes; pick a radius where phi' is nonzero");
  const bool positive = dphi_b > 0.0;

  // shrink eps until phi' keeps its sign across [b - eps, b + eps]
  double eps = 0.5 * b;
  IntervalBounds bounds{};
  for (;;) {
    if (eps < 1e-9 * b)
      fail(Errc::search_failure, "no interval of constant phi' sign found around b");
    bounds = sample_interval(d, b, eps, positive);
    if (bounds.sign_constant) break;
    eps *= 0.5;
  }

  const double n_bound = bounds.min_abs_dphi;
  const double m_bound = std::max(1.1 * bounds.max_abs_d2phi, 1e-12);
  const double radius_limit =
      std::min(eps, b * (b - eps) * n_bound / (m_bound * (b + eps) * (b + eps)));
  const double radius = 0.5 * radius_limit;  // strict inequality with margin

  // the bracketed factor of the circle closed form must keep one sign
  const Circle circle{b, radius};
  const double a = radius * radius - b * b;
  for (std::size_t i = 0; i < 4096; ++i) {
    const double r = circle.radius_at(grid_point(two_pi, i, 4096));
    const DensityValue v = d.eval(r);
    const double bracket = 0.5 * v.d2phi * (r * r * r + a * r) + 0.5 * v.dphi * (r * r - a);
    if (positive ? (bracket <= 0.0) : (bracket >= 0.0))
      fail(Errc::verification, "bracketed factor of dk_phi/dt changed sign on the circle");
  }

  const VertexReport report = find_vertices(d, circle_curve(circle));
  if (report.count != 2) {
    std::ostringstream msg;
    msg << "two-vertex construction found " << report.count << " vertices";
    fail(Errc::verification, msg.str());
  }
  return {b,      eps, n_bound, m_bound, radius, positive ? BracketSign::positive : BracketSign::negative,
          report.count};
}

std::optional<double> scan_nonconstancy(const RadialDensity& d, double r_min, double r_max) {
  if (!(r_min < r_max)) fail(Errc::domain, "scan window needs r_min < r_max");
  constexpr std::size_t samples = 4096;
  double best = -1.0;
  double best_r = r_min;
  for (std::size_t i = 0; i < samples; ++i) {
    const double r =
        r_min + (r_max - r_min) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double a = std::abs(d.eval(r).dphi);
    if (a > best) {
      best = a;
      best_r = r;
    }
  }
  if (best <= 1e-10) return std::nullopt;
  return best_r;
}

}  // namespace rvert
