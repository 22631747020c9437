#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "regred/exact.hpp"

namespace regred {

/// Polynomial in a marker variable w, truncated above a fixed degree.
///
/// Bivariate generating functions F(z, v) are stored with w = v - 1, so the
/// coefficient of w^j at z^n is the sum over objects of size n of binomial(Y, j)
/// for the marked statistic Y. Degree 2 is enough for mean and variance.
class MarkerPoly {
 public:
  explicit MarkerPoly(std::size_t degree = 2) : coeffs_(degree + 1) {}

  /// (1 + w)^exponent, truncated.
  static MarkerPoly one_plus_w_power(std::size_t degree, unsigned long exponent);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  Rational& operator[](std::size_t j) { return coeffs_[j]; }

  MarkerPoly& operator+=(const MarkerPoly& other);
  MarkerPoly& operator-=(const MarkerPoly& other);
  MarkerPoly& operator*=(const Rational& scalar);
  /// Adds scalar * other without a temporary.
  void add_scaled(const MarkerPoly& other, const Rational& scalar);

  friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);
  friend bool operator==(const MarkerPoly&, const MarkerPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

namespace detail {

inline void add_scaled(Rational& acc, const Rational& value, const Rational& scalar) { acc += value * scalar; }
inline void add_scaled(MarkerPoly& acc, const MarkerPoly& value, const Rational& scalar) {
  acc.add_scaled(value, scalar);
}

}  // namespace detail

/// Power series in z with coefficients 0..order kept exactly; higher terms are dropped.
///
/// Coeff is Rational for univariate series or MarkerPoly for bivariate ones.
/// Composition substitutes a Rational series of positive valuation for z.
template <class Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, Coeff zero) : zero_(zero), coeffs_(order + 1, zero) {}

  std::size_t order() const { return coeffs_.size() - 1; }
  const Coeff& operator[](std::size_t n) const { return coeffs_[n]; }
  Coeff& operator[](std::size_t n) { return coeffs_[n]; }
  const Coeff& zero() const { return zero_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    check_order(other.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    check_order(other.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  /// Product with a scalar-coefficient series, truncated at this order.
  TruncatedSeries times(const TruncatedSeries<Rational>& other) const {
    check_order(other.order());
    TruncatedSeries result(order(), zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == zero_) continue;
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
        if (other[j] == 0) continue;
        detail::add_scaled(result.coeffs_[i + j], coeffs_[i], other[j]);
      }
    }
    return result;
  }

  /// this(inner(z)); inner must have a zero constant term.
  TruncatedSeries compose(const TruncatedSeries<Rational>& inner) const {
    check_order(inner.order());
    if (inner[0] != 0) throw std::domain_error("series composition needs an inner series of valuation >= 1");
    std::size_t valuation = 1;
    while (valuation <= order() && inner[valuation] == 0) ++valuation;
    // Only coefficients whose power of inner can reach the working order matter.
    const std::size_t last = valuation > order() ? 0 : order() / valuation;
    TruncatedSeries result(order(), zero_);
    result.coeffs_[0] = coeffs_[0];
    if (last == 0) return result;
    // Horner: (((f_last) inner + f_{last-1}) inner + ...) inner + f_0.
    TruncatedSeries acc(order(), zero_);
    acc.coeffs_[0] = coeffs_[last];
    for (std::size_t j = last; j-- > 0;) {
      acc = acc.times(inner);
      acc.coeffs_[0] += coeffs_[j];
    }
    return acc;
  }

 private:
  void check_order(std::size_t other) const {
    if (other != order()) {
      throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs " +
                                  std::to_string(other));
    }
  }

  Coeff zero_;
  std::vector<Coeff> coeffs_;
};

using Series = TruncatedSeries<Rational>;
using BivariateSeries = TruncatedSeries<MarkerPoly>;

Series series_zero(std::size_t order);
Series series_one(std::size_t order);
/// The series z.
Series series_z(std::size_t order);
Series series_product(const Series& a, const Series& b);
/// 1 / a; a[0] must be nonzero.
Series series_reciprocal(const Series& a);

}  // namespace regred
