#include "rvert/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "rvert/core.hpp"
#include "rvert/quadrature.hpp"

namespace rvert {

namespace {

constexpr double origin_eps = 1e-10;

// C^2 piecewise-quintic interpolant. Node derivative pairs come from local
// quartic fits through five neighboring nodes, so polynomial data of degree
// up to four is reproduced exactly.
class QuinticSpline {
 public:
  QuinticSpline(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), coeffs_((x_.size() - 1) * 6) {
    const std::size_t n = x_.size();
    std::vector<double> d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) fit_node_derivatives(y, i, d1[i], d2[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double h = x_[i + 1] - x_[i];
      double* c = &coeffs_[6 * i];
      c[0] = y[i];
      c[1] = h * d1[i];
      c[2] = 0.5 * h * h * d2[i];
      const double va = y[i + 1] - c[0] - c[1] - c[2];
      const double vb = h * d1[i + 1] - c[1] - 2.0 * c[2];
      const double vc = h * h * d2[i + 1] - 2.0 * c[2];
      c[5] = 0.5 * (vc + 12.0 * va - 6.0 * vb);
      c[4] = vb - 3.0 * va - 2.0 * c[5];
      c[3] = va - c[4] - c[5];
    }
  }

  DensityValue eval(double r) const {
    const std::size_t i = interval(r);
    const double h = x_[i + 1] - x_[i];
    const double s = (r - x_[i]) / h;
    const double* c = &coeffs_[6 * i];
    double p = 0.0, dp = 0.0, d2p = 0.0;
    for (int k = 5; k >= 0; --k) {
      d2p = d2p * s + 2.0 * dp;
      dp = dp * s + p;
      p = p * s + c[k];
    }
    return {p, dp / h, d2p / (h * h)};
  }

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t interval(double r) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), r);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
  }

  void fit_node_derivatives(const std::vector<double>& y, std::size_t i, double& d1,
                            double& d2) const {
    const std::size_t n = x_.size();
    const std::size_t lo = std::min(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(i) - 2),
                                    static_cast<std::ptrdiff_t>(n - 5));
    // quartic through nodes lo..lo+4 in scaled coordinates about x_[i]
    double scale = 0.0;
    for (std::size_t j = 0; j < 5; ++j) scale = std::max(scale, std::abs(x_[lo + j] - x_[i]));
    double m[5][6];
    for (std::size_t j = 0; j < 5; ++j) {
      const double u = (x_[lo + j] - x_[i]) / scale;
      double p = 1.0;
      for (std::size_t k = 0; k < 5; ++k) {
        m[j][k] = p;
        p *= u;
      }
      m[j][5] = y[lo + j];
    }
    // Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < 5; ++col) {
      std::size_t piv = col;
      for (std::size_t row = col + 1; row < 5; ++row)
        if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
      if (piv != col)
        for (std::size_t k = col; k < 6; ++k) std::swap(m[col][k], m[piv][k]);
      for (std::size_t row = col + 1; row < 5; ++row) {
        const double f = m[row][col] / m[col][col];
        for (std::size_t k = col; k < 6; ++k) m[row][k] -= f * m[col][k];
      }
    }
    double a[5];
    for (std::size_t row = 5; row-- > 0;) {
      double acc = m[row][5];
      for (std::size_t k = row + 1; k < 5; ++k) acc -= m[row][k] * a[k];
      a[row] = acc / m[row][row];
    }
    d1 = a[1] / scale;
    d2 = 2.0 * a[2] / (scale * scale);
  }

  std::vector<double> x_;
  std::vector<double> coeffs_;
};

std::string family_name(DensityFamily f) {
  switch (f) {
    case DensityFamily::constant: return "constant";
    case DensityFamily::gaussian: return "gaussian";
    case DensityFamily::log_family: return "log";
    case DensityFamily::vertex_forcing: return "vertex_forcing";
    case DensityFamily::linear: return "linear";
    case DensityFamily::tabulated: return "tabulated";
  }
  return "?";
}

}  // namespace

class RadialDensity::Impl {
 public:
  Impl(DensityParams params, Polynomial p, Polynomial antider,
       std::shared_ptr<const QuinticSpline> spline)
      : params_(std::move(params)), p_(std::move(p)), antider_(std::move(antider)),
        spline_(std::move(spline)) {}

  const DensityParams& params() const { return params_; }
  const Polynomial& forcing_p() const { return p_; }

  bool includes_zero() const {
    switch (params_.family) {
      case DensityFamily::constant:
      case DensityFamily::gaussian:
      case DensityFamily::log_family:
      case DensityFamily::vertex_forcing:
        return true;
      case DensityFamily::linear:
        return params_.slope == 0.0;
      case DensityFamily::tabulated:
        return spline_->x_min() == 0.0 && spline_->eval(0.0).dphi == 0.0;
    }
    return false;
  }

  double domain_min() const {
    if (params_.family == DensityFamily::tabulated) return spline_->x_min();
    return 0.0;
  }

  double domain_max() const {
    if (params_.family == DensityFamily::tabulated) return spline_->x_max();
    return std::numeric_limits<double>::infinity();
  }

  bool in_domain(double r) const {
    if (!(r >= domain_min() && r <= domain_max())) return false;
    if (r == 0.0 && !includes_zero()) return false;
    return true;
  }

  void check_domain(double r) const {
    if (in_domain(r)) return;
    std::ostringstream msg;
    msg << "radius " << r << " outside the domain of the " << family_name(params_.family)
        << " density (valid r " << (includes_zero() ? ">= " : "> ") << domain_min();
    if (std::isfinite(domain_max())) msg << ", <= " << domain_max();
    msg << ")";
    fail(Errc::domain, msg.str());
  }

  DensityValue eval(double r) const {
    check_domain(r);
    switch (params_.family) {
      case DensityFamily::constant:
        return {params_.level, 0.0, 0.0};
      case DensityFamily::gaussian:
        return {-0.5 * r * r, -r, -1.0};
      case DensityFamily::linear:
        return {params_.slope * r, params_.slope, 0.0};
      case DensityFamily::log_family: {
        const double q = r * r + params_.a;
        return {params_.c1 * std::log(q) + params_.c2, 2.0 * params_.c1 * r / q,
                2.0 * params_.c1 * (params_.a - r * r) / (q * q)};
      }
      case DensityFamily::vertex_forcing: {
        const double q = r * r + params_.a;
        const double num = antider_(r) + params_.c1;
        const double dphi = num * r / q;
        const double d2phi = (p_(r) * r * q + num * (params_.a - r * r)) / (q * q);
        const double phi =
            params_.c2 + integrate_adaptive(
                             [this](double s) {
                               const double qs = s * s + params_.a;
                               return (antider_(s) + params_.c1) * s / qs;
                             },
                             params_.r_ref, r, 1e-10);
        return {phi, dphi, d2phi};
      }
      case DensityFamily::tabulated:
        return spline_->eval(r);
    }
    fail(Errc::domain, "unknown density family");
  }

 private:
  DensityParams params_;
  Polynomial p_;        // vertex_forcing only
  Polynomial antider_;  // its antiderivative, vanishing at 0
  std::shared_ptr<const QuinticSpline> spline_;
};

namespace {

RadialDensity::Impl* make_impl(DensityParams params, Polynomial p = Polynomial{},
                               Polynomial antider = Polynomial{},
                               std::shared_ptr<const QuinticSpline> spline = nullptr) {
  return new RadialDensity::Impl(std::move(params), std::move(p), std::move(antider),
                                 std::move(spline));
}

}  // namespace

RadialDensity RadialDensity::constant(double level) {
  DensityParams p;
  p.family = DensityFamily::constant;
  p.level = level;
  return RadialDensity(std::shared_ptr<const Impl>(make_impl(std::move(p))));
}

RadialDensity RadialDensity::gaussian() {
  DensityParams p;
  p.family = DensityFamily::gaussian;
  return RadialDensity(std::shared_ptr<const Impl>(make_impl(std::move(p))));
}

RadialDensity RadialDensity::linear(double slope) {
  DensityParams p;
  p.family = DensityFamily::linear;
  p.slope = slope;
  return RadialDensity(std::shared_ptr<const Impl>(make_impl(std::move(p))));
}

RadialDensity RadialDensity::log_family(double c1, double c2, double a) {
  if (!(a > 0.0)) fail(Errc::geometry, "log density needs a positive constant in r^2 + a");
  DensityParams p;
  p.family = DensityFamily::log_family;
  p.c1 = c1;
  p.c2 = c2;
  p.a = a;
  return RadialDensity(std::shared_ptr<const Impl>(make_impl(std::move(p))));
}

RadialDensity RadialDensity::vertex_forcing(std::vector<double> roots, double a, double c1,
                                            double c2, double r_ref) {
  if (!(a > 0.0)) fail(Errc::geometry, "vertex-forcing density needs a positive constant in r^2 + a");
  if (!(r_ref > 0.0)) fail(Errc::domain, "vertex-forcing anchor radius must be positive");
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (!(roots[i] < roots[i + 1]))
      fail(Errc::root_placement, "vertex-forcing roots must be strictly increasing");
  Polynomial p = Polynomial::from_roots(roots);
  Polynomial antider = p.antiderivative();
  DensityParams params;
  params.family = DensityFamily::vertex_forcing;
  params.c1 = c1;
  params.c2 = c2;
  params.a = a;
  params.r_ref = r_ref;
  params.roots = std::move(roots);
  return RadialDensity(
      std::shared_ptr<const Impl>(make_impl(std::move(params), std::move(p), std::move(antider))));
}

RadialDensity RadialDensity::tabulated(std::vector<double> r, std::vector<double> phi) {
  if (r.size() < 8) fail(Errc::domain, "tabulated density needs at least 8 nodes");
  if (r.size() != phi.size()) fail(Errc::domain, "tabulated r and phi lengths differ");
  if (!(r.front() >= 0.0)) fail(Errc::domain, "tabulated radii must be nonnegative");
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (!(r[i] < r[i + 1])) fail(Errc::domain, "tabulated radii must be strictly increasing");
  DensityParams params;
  params.family = DensityFamily::tabulated;
  params.grid_r = r;
  params.grid_phi = phi;
  auto spline = std::make_shared<const QuinticSpline>(std::move(r), std::move(phi));
  return RadialDensity(std::shared_ptr<const Impl>(
      make_impl(std::move(params), Polynomial{}, Polynomial{}, std::move(spline))));
}

DensityValue RadialDensity::eval(double r) const { return impl_->eval(r); }

double RadialDensity::dphi_over_r(double r) const {
  if (r >= origin_eps) return impl_->eval(r).dphi / r;
  if (!includes_zero() || impl_->eval(0.0).dphi != 0.0)
    fail(Errc::origin_singularity,
         "evaluation within 1e-10 of the origin with phi'(0) != 0");
  return impl_->eval(0.0).d2phi;  // limit of phi'(r)/r
}

DensityFamily RadialDensity::family() const { return impl_->params().family; }
const DensityParams& RadialDensity::params() const { return impl_->params(); }
bool RadialDensity::includes_zero() const { return impl_->includes_zero(); }
double RadialDensity::domain_min() const { return impl_->domain_min(); }
double RadialDensity::domain_max() const { return impl_->domain_max(); }
bool RadialDensity::in_domain(double r) const { return impl_->in_domain(r); }

RadialDensity build_vertex_forcing(double R, double b, int n, std::optional<std::vector<double>> roots,
                                   double c1, double c2) {
  if (!(b > 0.0) || !(R > b))
    fail(Errc::geometry, "vertex-forcing construction needs R > b > 0");
  if (n < 1) fail(Errc::domain, "vertex count parameter n must be >= 1");
  std::vector<double> rs;
  if (roots) {
    rs = std::move(*roots);
    if (rs.size() != static_cast<std::size_t>(n - 1))
      fail(Errc::root_placement, "expected n - 1 roots");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (!(rs[i] > R - b && rs[i] < R + b))
        fail(Errc::root_placement, "roots must lie strictly between R - b and R + b");
      if (i > 0 && !(rs[i - 1] < rs[i]))
        fail(Errc::root_placement, "roots must be strictly increasing");
    }
  } else {
    for (int i = 1; i < n; ++i)
      rs.push_back((R - b) + static_cast<double>(i) * 2.0 * b / static_cast<double>(n));
  }
  return RadialDensity::vertex_forcing(std::move(rs), R * R - b * b, c1, c2, /*r_ref=*/R);
}

RadialDensity build_log_family(double R, double b, double c1, double c2) {
  if (!(b >= 0.0) || !(R > b))
    fail(Errc::geometry, "log-family construction needs R > b >= 0");
  return RadialDensity::log_family(c1, c2, R * R - b * b);
}

double forcing_ode_residual(const RadialDensity& d, double R, double b, const Polynomial& p,
                            double r) {
  const DensityValue v = d.eval(r);
  const double a = R * R - b * b;
  return v.d2phi * (r * r * r + a * r) + v.dphi * (r * r - a) - r * r * p(r);
}

}  // namespace rvert
