#pragma once

#include <optional>
#include <vector>

#include "rvert/vertices.hpp"

namespace rvert {

/// Gaussian density plus the unit circle at distance |b| from the origin; its
/// curvature with density is exactly -b sin t, so the circle has two vertices.
struct GaussTwoVertexExample {
  RadialDensity density;
  Circle circle;
  double b;
  double expected_k_phi(double t) const { return -b * std::sin(t); }
};

GaussTwoVertexExample make_gauss_counterexample(double b);

/// Output of force_vertex_count: a density whose curvature with density on the
/// given circle has exactly 2n critical parameters, with their closed-form
/// predictions and the verifying report.
struct ForcedVertexConstruction {
  RadialDensity density;
  Circle circle;
  std::vector<double> predicted_vertex_params;  // sorted, in [0, 2 pi)
  VertexReport report;
};

/// Builds the vertex-forcing density for the circle (R, b) and post-verifies
/// that the numeric vertex count equals 2n (throws Errc::verification if not).
/// Predictions: t = pi/2, 3 pi/2 plus the two solutions of
/// sin t = (root_i^2 - R^2 - b^2) / (2 R b) per root.
ForcedVertexConstruction force_vertex_count(double R, double b, int n,
                                            std::optional<std::vector<double>> roots = std::nullopt,
                                            double c1 = 0.0, double c2 = 0.0,
                                            const VertexOptions& options = {});

/// Output of make_constant_curvature_density: the log-family density whose
/// curvature with density on the circle (R, b) is the constant (1 + c1) / R.
struct ConstantCurvatureConstruction {
  RadialDensity density;
  Circle circle;
  double k_value;
  double max_minus_min;  // measured spread over the verification grid
};

/// Post-verifies constancy to 1e-10 over a 4096-point grid.
ConstantCurvatureConstruction make_constant_curvature_density(double R, double b, double c1,
                                                              double c2);

enum class BracketSign { positive, negative };

/// Data pinning down a circle with exactly two vertices for a density that is
/// non-constant near radius b: the half-width epsilon of a radius interval
/// where phi' keeps one sign, the sampled bounds N <= |phi'| and |phi''| < M
/// there, and a radius R below both epsilon and b(b - eps) N / (M (b + eps)^2),
/// which forces the bracketed factor of the closed-form dk_phi/dt to keep one
/// sign so that only cos t = 0 yields critical parameters.
struct CounterexampleCertificate {
  double b;
  double epsilon;
  double N;
  double M;
  double R;
  BracketSign sign;
  int verified_count;
};

/// Executes the two-vertex construction at witness radius b (phi'(b) != 0).
/// Throws Errc::not_applicable when |phi'(b)| < 1e-12, Errc::search_failure if
/// no sign-constant interval is found, Errc::verification if the sign check or
/// the vertex count fails.
CounterexampleCertificate find_two_vertex_circle(const RadialDensity& d, double b);

/// Radius maximizing |phi'| over a 4096-point scan of [r_min, r_max], or
/// nullopt when the density is numerically constant there (max < 1e-10).
std::optional<double> scan_nonconstancy(const RadialDensity& d, double r_min, double r_max);

}  // namespace rvert
