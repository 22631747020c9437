#include "regred/series.hpp"

namespace regred {

MarkerPoly MarkerPoly::one_plus_w_power(std::size_t degree, unsigned long exponent) {
  MarkerPoly p(degree);
  for (std::size_t j = 0; j <= degree; ++j) p.coeffs_[j] = binomial(static_cast<long>(exponent), static_cast<long>(j));
  return p;
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& other) {
  for (std::size_t j = 0; j < coeffs_.size() && j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& other) {
  for (std::size_t j = 0; j < coeffs_.size() && j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

MarkerPoly& MarkerPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void MarkerPoly::add_scaled(const MarkerPoly& other, const Rational& scalar) {
  for (std::size_t j = 0; j < coeffs_.size() && j < other.coeffs_.size(); ++j) {
    if (other.coeffs_[j] != 0) coeffs_[j] += other.coeffs_[j] * scalar;
  }
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
  MarkerPoly result(std::min(a.degree(), b.degree()));
  for (std::size_t i = 0; i <= result.degree(); ++i) {
    for (std::size_t j = 0; i + j <= result.degree(); ++j) result.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return result;
}

Series series_zero(std::size_t order) { return Series(order, Rational(0)); }

Series series_one(std::size_t order) {
  Series s = series_zero(order);
  s[0] = 1;
  return s;
}

Series series_z(std::size_t order) {
  Series s = series_zero(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Series series_product(const Series& a, const Series& b) { return a.times(b); }

Series series_reciprocal(const Series& a) {
  if (a[0] == 0) throw std::domain_error("series_reciprocal: constant term must be nonzero");
  Series inv = series_zero(a.order());
  const Rational lead = 1 / a[0];
  inv[0] = lead;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * inv[n - k];
    }
    inv[n] = -acc * lead;
  }
  return inv;
}

}  // namespace regred
