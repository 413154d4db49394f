#include "rvert/quadrature.hpp"

#include <array>
#include <cmath>

namespace rvert {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss rule on the odd-indexed abscissae.
constexpr std::array<double, 8> kron_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

constexpr std::array<double, 8> kron_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double gauss = 0.0;
  double kron = 0.0;
  for (std::size_t i = 0; i < kron_x.size(); ++i) {
    const double dx = half * kron_x[i];
    double fsum = f(mid + dx);
    if (kron_x[i] != 0.0) fsum += f(mid - dx);
    kron += kron_w[i] * fsum;
    if (i % 2 == 1) gauss += gauss_w[i / 2] * fsum;
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                     int depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || depth >= 48 || b - a < 1e-14 * (1.0 + std::abs(a) + std::abs(b))) {
    return r.kronrod;
  }
  const double mid = 0.5 * (a + b);
  return integrate_rec(f, a, mid, 0.5 * tol, depth + 1) +
         integrate_rec(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_adaptive(f, b, a, abs_tol);
  return integrate_rec(f, a, b, abs_tol, 0);
}

}  // namespace rvert
