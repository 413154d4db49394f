#include "rvert/curvature.hpp"

#include <cmath>

namespace rvert {

namespace {

constexpr double speed_floor = 1e-9;

double checked_speed(Vec2 v) {
  const double s = norm(v);
  if (s < speed_floor) fail(Errc::regularity, "|velocity| below 1e-9; curve not regular here");
  return s;
}

void check_circle_origin(const RadialDensity& d, const Circle& c) {
  if (std::abs(c.R - c.b) > 1e-10) return;
  if (d.includes_zero() && d.eval(0.0).dphi == 0.0) return;
  fail(Errc::origin_on_circle,
       "circle passes through the origin (|R - b| <= 1e-10) and phi'(0) != 0");
}

}  // namespace

double euclidean_curvature(const Curve& c, double t) {
  const Vec2 v = c.velocity(t);
  const double s = checked_speed(c, t, v);
  return cross(v, c.acceleration(t)) / (s * s * s);
}

double normal_derivative(const RadialDensity& d, const Curve& c, double t) {
  const Vec2 p = c.position(t);
  const Vec2 v = c.velocity(t);
  const double s = checked_speed(c, t, v);
  const double r = norm(p);
  // phi'(r) (y x' - x y')/(r |v|), written with the guarded ratio phi'(r)/r so
  // origin-touching points of phi'(0) = 0 densities take the continuous limit
  return d.dphi_over_r(r) * (-cross(p, v)) / s;
}

double phi_curvature(const RadialDensity& d, const Curve& c, double t) {
  return euclidean_curvature(c, t) - normal_derivative(d, c, t);
}

double gauss_phi_curvature(const Curve& c, double t) {
  const Vec2 v = c.velocity(t);
  if (std::abs(norm(v) - 1.0) >= 1e-8)
    fail(Errc::not_unit_speed, "Gauss-plane form needs an arc-length parametrization");
  const Vec2 p = c.position(t);
  const Vec2 a = c.acceleration(t);
  return cross(v, a) - p.x * v.y + v.x * p.y;
}

double circle_phi_curvature(const RadialDensity& d, const Circle& c, double t) {
  check_circle_origin(d, c);
  const double r = c.radius_at(t);
  return 1.0 / c.R + d.dphi_over_r(r) * (c.R + c.b * std::sin(t));
}

double circle_dk_dt(const RadialDensity& d, const Circle& c, double t) {
  check_circle_origin(d, c);
  // Only reachable with r ~ 0 when phi'(0) = 0 and |R - b| <= 1e-10; clamp
  // keeps the expression finite at that isolated parameter.
  const double r = std::max(c.radius_at(t), 1e-12);
  const DensityValue v = d.eval(r);
  const double a = c.R * c.R - c.b * c.b;
  const double bracket =
      0.5 * v.d2phi * (r * r * r + a * r) + 0.5 * v.dphi * (r * r - a);
  return c.b * std::cos(t) / (r * r * r) * bracket;
}

double dk_phi_dt_fd(const RadialDensity& d, const Curve& c, double t, std::optional<double> h) {
  const double step = h.value_or(1e-4 * c.period());
  const double f1 = phi_curvature(d, c, t - 2.0 * step);
  const double f2 = phi_curvature(d, c, t - step);
  const double f3 = phi_curvature(d, c, t + step);
  const double f4 = phi_curvature(d, c, t + 2.0 * step);
  return (f1 - 8.0 * f2 + 8.0 * f3 - f4) / (12.0 * step);
}

double dk_phi_dt_numeric(const RadialDensity& d, const Curve& c, double t,
                         std::optional<double> h) {
  if (!c.has_exact_jerk()) return dk_phi_dt_fd(d, c, t, h);

  const Vec2 p = c.position(t);
  const Vec2 v = c.velocity(t);
  const Vec2 a = c.acceleration(t);
  const Vec2 j = c.jerk(t);
  const double s = checked_speed(c, t, v);
  const double r = norm(p);
  if (r < 1e-10) return dk_phi_dt_fd(d, c, t, h);  // origin-touching parameter

  // d/dt of k = cross(v, a)/s^3
  const double va = dot(v, a);
  const double dk = cross(v, j) / (s * s * s) - 3.0 * cross(v, a) * va / std::pow(s, 5);

  // d/dt of dphi/dn = -u * w / s, with u = phi'(r)/r and w = cross(p, v)
  const DensityValue dv = d.eval(r);
  const double u = d.dphi_over_r(r);
  const double w = cross(p, v);
  const double dr = dot(p, v) / r;
  const double du = dr * (dv.d2phi - u) / r;
  const double dw = cross(p, a);
  const double ds = va / s;
  const double d_dphi_dn = -(du * w / s + u * dw / s - u * w * ds / (s * s));

  return dk - d_dphi_dn;
}

CurvatureSample curvature_sample(const RadialDensity& d, const Curve& c, double t) {
  const double k = euclidean_curvature(c, t);
  const double dn = normal_derivative(d, c, t);
  return {t, norm(c.position(t)), k, dn, k - dn, dk_phi_dt_numeric(d, c, t)};
}

}  // namespace rvert
