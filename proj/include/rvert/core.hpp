#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rvert {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Plane point / vector.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product (a.x, a.y, 0) x (b.x, b.y, 0).
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

/// Counterclockwise rotation about the origin.
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Failure categories surfaced by the library; the CLI maps them to exit codes.
enum class Errc {
  domain,              // argument outside a density's valid radius range
  root_placement,      // forcing roots not strictly increasing inside (R-b, R+b)
  geometry,            // R <= b and similar size constraints
  shape,               // polar curve with |c| >= a
  sample,              // too few sample points for a fitted curve
  regularity,          // |velocity| below threshold
  origin_singularity,  // curve touches the origin with phi'(0) != 0
  not_unit_speed,      // Gauss-plane formula on a non-arc-length curve
  origin_on_circle,    // circle closed forms with the origin on the circle
  degenerate,          // construction collapses (e.g. concentric two-vertex request)
  verification,        // a construction failed its own numeric post-check
  not_applicable,      // two-vertex search at a radius where phi' vanishes
  search_failure,      // sign-interval search shrank below resolution
  scene,               // scene file parse / validation problems
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace rvert
