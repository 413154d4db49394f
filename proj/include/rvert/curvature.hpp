#pragma once

#include <optional>

#include "rvert/curve.hpp"
#include "rvert/density.hpp"

namespace rvert {

// Sign conventions, shared by every operation in this header: curves are
// counterclockwise and the unit normal is the leftward one, n = (-y', x')/|v|,
// which points toward the center of a circle. With that choice the Euclidean
// curvature of a counterclockwise circle of radius R is +1/R, and the
// curvature with density k_phi = k - dphi/dn of the circle (R cos t,
// R sin t + b) has the closed form 1/R + phi'(r) (R + b sin t) / r.

/// Curvature quantities of one (density, curve) pair at parameter t.
struct CurvatureSample {
  double t;
  double r;          // distance from the origin
  double k;          // Euclidean curvature
  double dphi_dn;    // normal derivative of phi
  double k_phi;      // k - dphi_dn
  double dk_phi_dt;  // parameter derivative of k_phi
};

/// Signed curvature (x'y'' - x''y')/|v|^3. Throws Errc::regularity when
/// |velocity| < 1e-9.
double euclidean_curvature(const Curve& c, double t);

/// dphi/dn = phi'(r) (y x' - x y') / (r |v|): the radial gradient of phi dotted
/// with the leftward unit normal. Continued through the origin when phi'(0) = 0.
double normal_derivative(const RadialDensity& d, const Curve& c, double t);

/// Curvature with density, k_phi = k - dphi/dn.
double phi_curvature(const RadialDensity& d, const Curve& c, double t);

/// Gauss-plane polynomial form x'y'' - x''y' - xy' + x'y, valid only for
/// arc-length parametrizations; throws Errc::not_unit_speed when
/// ||velocity| - 1| >= 1e-8. Equals phi_curvature with the gaussian density.
double gauss_phi_curvature(const Curve& c, double t);

/// Closed form of k_phi on the canonical circle: 1/R + phi'(r) (R + b sin t) / r
/// with r(t) = sqrt(R^2 + b^2 + 2 R b sin t). Throws Errc::origin_on_circle when
/// the circle passes through the origin, unless phi'(0) = 0.
double circle_phi_curvature(const RadialDensity& d, const Circle& c, double t);

/// Closed form of dk_phi/dt on the canonical circle:
///   (b cos t / r^3) [ phi'' (r^3 + (R^2-b^2) r)/2 + phi' (r^2 - (R^2-b^2))/2 ].
double circle_dk_dt(const RadialDensity& d, const Circle& c, double t);

/// Parameter derivative of k_phi for a general curve: termwise analytic
/// differentiation when the curve carries an exact third derivative, otherwise
/// a five-point central difference of phi_curvature with step h (default
/// 1e-4 * period).
double dk_phi_dt_numeric(const RadialDensity& d, const Curve& c, double t,
                         std::optional<double> h = std::nullopt);

/// Five-point central difference of phi_curvature; the cross-check companion
/// of the analytic path inside dk_phi_dt_numeric.
double dk_phi_dt_fd(const RadialDensity& d, const Curve& c, double t,
                    std::optional<double> h = std::nullopt);

/// All quantities of CurvatureSample at one parameter.
CurvatureSample curvature_sample(const RadialDensity& d, const Curve& c, double t);

}  // namespace rvert
