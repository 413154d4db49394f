#include "rvert/polynomial.hpp"

#include <utility>

namespace rvert {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double root : roots) {
    // multiply by (r - root)
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double r) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * r + coeffs_[i];
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> c(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(c));
}

}  // namespace rvert
