#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rvert/polynomial.hpp"

namespace rvert {

enum class DensityFamily { constant, gaussian, log_family, vertex_forcing, linear, tabulated };

/// Value triple of a radial density at one radius.
struct DensityValue {
  double phi;
  double dphi;
  double d2phi;
};

/// Construction parameters of a density, kept around for serialization.
struct DensityParams {
  DensityFamily family = DensityFamily::constant;
  double level = 0.0;              // constant
  double slope = 0.0;              // linear
  double c1 = 0.0;                 // log_family, vertex_forcing
  double c2 = 0.0;                 // additive anchor; never affects curvature
  double a = 0.0;                  // the positive constant in r^2 + a
  double r_ref = 1.0;              // vertex_forcing: radius where phi = c2
  std::vector<double> roots;       // vertex_forcing
  std::vector<double> grid_r;      // tabulated
  std::vector<double> grid_phi;    // tabulated
};

/// Radial density weight e^phi(r): phi with exact first and second derivatives.
///
/// Families:
///   constant(c)                     phi = c
///   gaussian()                      phi = -r^2/2
///   linear(lambda)                  phi = lambda * r
///   log_family(c1, c2, a)           phi = c1 * ln(r^2 + a) + c2,  a > 0
///   vertex_forcing(roots, a, ...)   phi'(r) = (P(r) + c1) * r / (r^2 + a)
///                                   with P the antiderivative of the monic
///                                   polynomial with the given roots, P(0) = 0;
///                                   phi recovered by adaptive quadrature with
///                                   phi(r_ref) = c2
///   tabulated(r, phi)               C^2 piecewise-quintic interpolant, >= 8 nodes
///
/// Values are immutable after construction and evaluation is pure, so a density
/// may be shared across threads freely.
class RadialDensity {
 public:
  static RadialDensity constant(double level);
  static RadialDensity gaussian();
  static RadialDensity linear(double slope);
  static RadialDensity log_family(double c1, double c2, double a);
  static RadialDensity vertex_forcing(std::vector<double> roots, double a, double c1, double c2,
                                      double r_ref = 1.0);
  static RadialDensity tabulated(std::vector<double> r, std::vector<double> phi);

  /// (phi, phi', phi'') at radius r; throws Errc::domain outside the valid range.
  DensityValue eval(double r) const;

  double phi(double r) const { return eval(r).phi; }
  double dphi(double r) const { return eval(r).dphi; }
  double d2phi(double r) const { return eval(r).d2phi; }

  /// phi'(r)/r, continued through r = 0 by phi''(0) when phi'(0) = 0.
  /// Throws Errc::origin_singularity for r < 1e-10 when phi'(0) != 0.
  double dphi_over_r(double r) const;

  DensityFamily family() const;
  const DensityParams& params() const;

  /// True when the domain is r >= 0 (families with phi'(0) = 0); otherwise r > 0.
  bool includes_zero() const;
  double domain_min() const;  // smallest admissible radius (0 when includes_zero)
  double domain_max() const;  // +inf except for tabulated grids
  bool in_domain(double r) const;

  class Impl;

 private:
  explicit RadialDensity(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Density whose curvature-with-density on the circle of radius R about (0, b)
/// has critical parameters exactly where cos t = 0 or r(t) hits one of the
/// n - 1 roots. Default roots are evenly spaced: r_i = (R - b) + i * 2b / n.
/// Requires R > b > 0 and roots strictly increasing inside (R - b, R + b).
RadialDensity build_vertex_forcing(double R, double b, int n,
                                   std::optional<std::vector<double>> roots = std::nullopt,
                                   double c1 = 0.0, double c2 = 0.0);

/// Density phi = c1 * ln(r^2 + R^2 - b^2) + c2; requires R > b >= 0.
RadialDensity build_log_family(double R, double b, double c1, double c2);

/// Residual of phi''(r^3 + (R^2-b^2) r) + phi'(r^2 - R^2 + b^2) = r^2 p(r);
/// identically zero (up to rounding) for a matching vertex-forcing density.
double forcing_ode_residual(const RadialDensity& d, double R, double b, const Polynomial& p,
                            double r);

}  // namespace rvert
