#pragma once

#include <span>
#include <vector>

namespace rvert {

/// Real polynomial in monomial form, coefficient i multiplying r^i.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  /// Monic product (r - roots[0])...(r - roots[k-1]); the empty product is 1.
  static Polynomial from_roots(std::span<const double> roots);

  double operator()(double r) const;

  /// Antiderivative normalized to vanish at 0.
  Polynomial antiderivative() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

}  // namespace rvert
