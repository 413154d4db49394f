#include "rvert/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rvert/rootfind.hpp"

namespace rvert {

namespace {

class CircleCurve final : public CurveImpl {
 public:
  explicit CircleCurve(Circle c) : c_(c) {}

  double period() const override { return two_pi; }
  Vec2 position(double t) const override {
    return {c_.R * std::cos(t), c_.R * std::sin(t) + c_.b};
  }
  Vec2 velocity(double t) const override { return {-c_.R * std::sin(t), c_.R * std::cos(t)}; }
  Vec2 acceleration(double t) const override {
    return {-c_.R * std::cos(t), -c_.R * std::sin(t)};
  }
  Vec2 jerk(double t) const override { return {c_.R * std::sin(t), -c_.R * std::cos(t)}; }
  std::optional<Circle> as_circle() const override { return c_; }

 private:
  Circle c_;
};

class PolarCurve final : public CurveImpl {
 public:
  explicit PolarCurve(RotSymmetricCurve s) : s_(s) {}

  double period() const override { return two_pi; }

  Vec2 position(double t) const override {
    const Radial r = radial(t);
    return {r.rho * std::cos(t), r.rho * std::sin(t)};
  }
  Vec2 velocity(double t) const override {
    const Radial r = radial(t);
    const double ct = std::cos(t), st = std::sin(t);
    return {r.d1 * ct - r.rho * st, r.d1 * st + r.rho * ct};
  }
  Vec2 acceleration(double t) const override {
    const Radial r = radial(t);
    const double ct = std::cos(t), st = std::sin(t);
    return {(r.d2 - r.rho) * ct - 2.0 * r.d1 * st, (r.d2 - r.rho) * st + 2.0 * r.d1 * ct};
  }
  Vec2 jerk(double t) const override {
    const Radial r = radial(t);
    const double ct = std::cos(t), st = std::sin(t);
    return {(r.d3 - 3.0 * r.d1) * ct - (3.0 * r.d2 - r.rho) * st,
            (r.d3 - 3.0 * r.d1) * st + (3.0 * r.d2 - r.rho) * ct};
  }

 private:
  struct Radial {
    double rho, d1, d2, d3;
  };
  Radial radial(double t) const {
    const double m = static_cast<double>(s_.m);
    const double cm = std::cos(m * t), sm = std::sin(m * t);
    return {s_.a + s_.c * cm, -s_.c * m * sm, -s_.c * m * m * cm, s_.c * m * m * m * sm};
  }

  RotSymmetricCurve s_;
};

// Real trigonometric polynomial sum_k (a_k cos kt + b_k sin kt) for x and y.
class FourierCurve final : public CurveImpl {
 public:
  explicit FourierCurve(std::span<const Vec2> pts) {
    const std::size_t n = pts.size();
    const std::size_t modes = n / 2 + 1;
    ax_.assign(modes, 0.0);
    bx_.assign(modes, 0.0);
    ay_.assign(modes, 0.0);
    by_.assign(modes, 0.0);
    for (std::size_t k = 0; k < modes; ++k) {
      double cx = 0.0, sx = 0.0, cy = 0.0, sy = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double angle = two_pi * static_cast<double>(k) * static_cast<double>(j) /
                             static_cast<double>(n);
        const double c = std::cos(angle), s = std::sin(angle);
        cx += pts[j].x * c;
        sx += pts[j].x * s;
        cy += pts[j].y * c;
        sy += pts[j].y * s;
      }
      // Nyquist mode of an even sample count carries weight 1/n, interior modes 2/n.
      const bool halved = (k == 0) || (2 * k == n);
      const double w = (halved ? 1.0 : 2.0) / static_cast<double>(n);
      ax_[k] = w * cx;
      bx_[k] = halved ? 0.0 : w * sx;
      ay_[k] = w * cy;
      by_[k] = halved ? 0.0 : w * sy;
    }
  }

  double period() const override { return two_pi; }

  Vec2 position(double t) const override { return sum(t, 0); }
  Vec2 velocity(double t) const override { return sum(t, 1); }
  Vec2 acceleration(double t) const override { return sum(t, 2); }
  Vec2 jerk(double t) const override { return sum(t, 3); }

 private:
  // order-th derivative of the trigonometric polynomial
  Vec2 sum(double t, int order) const {
    double x = 0.0, y = 0.0;
    for (std::size_t k = 0; k < ax_.size(); ++k) {
      const double kk = static_cast<double>(k);
      const double c = std::cos(kk * t), s = std::sin(kk * t);
      double fc, fs;  // factors multiplying (a_k, b_k) of the cos/sin pair
      switch (order) {
        case 0: fc = c; fs = s; break;
        case 1: fc = -kk * s; fs = kk * c; break;
        case 2: fc = -kk * kk * c; fs = -kk * kk * s; break;
        default: fc = kk * kk * kk * s; fs = -kk * kk * kk * c; break;
      }
      x += ax_[k] * fc + bx_[k] * fs;
      y += ay_[k] * fc + by_[k] * fs;
    }
    return {x, y};
  }

  std::vector<double> ax_, bx_, ay_, by_;
};

class RotatedCurve final : public CurveImpl {
 public:
  RotatedCurve(std::shared_ptr<const CurveImpl> base, double angle)
      : base_(std::move(base)), angle_(angle) {}

  double period() const override { return base_->period(); }
  Vec2 position(double t) const override { return rotate(base_->position(t), angle_); }
  Vec2 velocity(double t) const override { return rotate(base_->velocity(t), angle_); }
  Vec2 acceleration(double t) const override { return rotate(base_->acceleration(t), angle_); }
  Vec2 jerk(double t) const override { return rotate(base_->jerk(t), angle_); }
  bool has_exact_jerk() const override { return base_->has_exact_jerk(); }
  // r(t), speed and all curvature quantities are rotation-invariant, so the
  // closed-form circle paths stay valid for the rotated curve.
  std::optional<Circle> as_circle() const override { return base_->as_circle(); }

 private:
  std::shared_ptr<const CurveImpl> base_;
  double angle_;
};

}  // namespace

Curve Curve::rotated(double angle) const {
  return Curve(std::make_shared<RotatedCurve>(impl_, angle));
}

Curve circle_curve(const Circle& c) {
  if (!(c.R > 0.0)) fail(Errc::geometry, "circle radius must be positive");
  if (!(c.b >= 0.0)) fail(Errc::geometry, "circle center distance must be nonnegative");
  return Curve(std::make_shared<CircleCurve>(c));
}

Curve polar_curve(const RotSymmetricCurve& s) {
  if (!(s.a > 0.0) || !(std::abs(s.c) < s.a))
    fail(Errc::shape, "polar curve needs |c| < a with a > 0");
  if (s.m < 2) fail(Errc::shape, "polar curve needs m >= 2");
  return Curve(std::make_shared<PolarCurve>(s));
}

Curve sampled_curve(std::span<const Vec2> points) {
  if (points.size() < 16) fail(Errc::sample, "sampled curve needs at least 16 points");
  std::vector<Vec2> pts(points.begin(), points.end());
  // normalize to counterclockwise, keeping the first point at parameter 0
  double area2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2& p = pts[i];
    const Vec2& q = pts[(i + 1) % pts.size()];
    area2 += cross(p, q);
  }
  if (area2 < 0.0) std::reverse(pts.begin() + 1, pts.end());
  auto impl = std::make_shared<FourierCurve>(std::span<const Vec2>(pts));
  // regularity screen: fitted user data may degenerate even when the polygon looks fine
  double min_speed = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4096; ++i) {
    const double t = two_pi * static_cast<double>(i) / 4096.0;
    min_speed = std::min(min_speed, norm(impl->velocity(t)));
  }
  if (!(min_speed > 1e-9)) fail(Errc::regularity, "sampled curve is not regular (|velocity| ~ 0)");
  return Curve(std::move(impl));
}

double min_origin_distance(const Curve& c) {
  const double period = c.period();
  constexpr std::size_t n = 4096;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = period * static_cast<double>(i) / static_cast<double>(n);
    const double d = norm(c.position(t));
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  const double h = period / static_cast<double>(n);
  const double t0 = period * static_cast<double>(best_i) / static_cast<double>(n);
  const double t_min = golden_section_min([&](double t) { return norm(c.position(t)); }, t0 - h,
                                          t0 + h, 1e-10);
  return std::min(best, norm(c.position(t_min)));
}

}  // namespace rvert
