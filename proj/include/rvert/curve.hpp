#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rvert/core.hpp"

namespace rvert {

enum class Orientation { counterclockwise, clockwise };

/// Circle of radius R with center at distance b from the origin; the canonical
/// placement puts the center at (0, b), which any other center reduces to by a
/// rotation about the origin.
struct Circle {
  double b;
  double R;

  static Circle from_center(Vec2 center, double radius) { return {norm(center), radius}; }

  bool passes_through_origin() const { return std::abs(R - b) < 1e-12; }

  /// Distance from the origin along the canonical parametrization,
  /// r(t) = sqrt(R^2 + b^2 + 2 R b sin t).
  double radius_at(double t) const {
    return std::sqrt(std::max(0.0, R * R + b * b + 2.0 * R * b * std::sin(t)));
  }
};

/// Star-shaped curve with polar radius rho(theta) = a + c cos(m theta); invariant
/// under rotation about the origin by 2 pi / m.
struct RotSymmetricCurve {
  double a;
  double c;
  int m;
};

class CurveImpl {
 public:
  virtual ~CurveImpl() = default;
  virtual double period() const = 0;
  virtual Vec2 position(double t) const = 0;
  virtual Vec2 velocity(double t) const = 0;
  virtual Vec2 acceleration(double t) const = 0;
  virtual Vec2 jerk(double t) const = 0;
  virtual bool has_exact_jerk() const { return true; }
  virtual std::optional<Circle> as_circle() const { return std::nullopt; }
};

/// Closed plane curve with exact parameter derivatives up to third order.
/// Orientation is normalized to counterclockwise at construction. Immutable
/// and safe to evaluate from any number of threads.
class Curve {
 public:
  explicit Curve(std::shared_ptr<const CurveImpl> impl) : impl_(std::move(impl)) {}

  double period() const { return impl_->period(); }
  Vec2 position(double t) const { return impl_->position(t); }
  Vec2 velocity(double t) const { return impl_->velocity(t); }
  Vec2 acceleration(double t) const { return impl_->acceleration(t); }
  Vec2 jerk(double t) const { return impl_->jerk(t); }
  bool has_exact_jerk() const { return impl_->has_exact_jerk(); }
  Orientation orientation() const { return Orientation::counterclockwise; }

  /// Set when the curve is a canonical circle (possibly rotated about the
  /// origin; the radius function r(t) is unchanged by such rotations).
  std::optional<Circle> as_circle() const { return impl_->as_circle(); }

  /// The same curve rotated about the origin by the given angle.
  Curve rotated(double angle) const;

 private:
  std::shared_ptr<const CurveImpl> impl_;
};

/// Canonical circle parametrization (R cos t, R sin t + b), period 2 pi.
Curve circle_curve(const Circle& c);

/// rho(theta) (cos theta, sin theta) for rho = a + c cos(m theta).
/// Throws Errc::shape unless |c| < a and m >= 2.
Curve polar_curve(const RotSymmetricCurve& s);

/// Trigonometric interpolation of >= 16 uniformly spaced samples of one full
/// period (first point not repeated). Derivatives differentiate the resulting
/// trigonometric polynomial exactly; period is 2 pi. Clockwise inputs are
/// reversed. Self-intersection is not checked.
Curve sampled_curve(std::span<const Vec2> points);

/// Smallest distance from the curve to the origin: coarse 4096-point scan
/// refined by golden-section descent to 1e-10 in parameter.
double min_origin_distance(const Curve& c);

}  // namespace rvert
