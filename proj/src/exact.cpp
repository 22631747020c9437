#include "regred/exact.hpp"

#include <stdexcept>

namespace regred {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer catalan(unsigned n) { return binomial(2L * n, n) / (n + 1); }

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Integer power(long base, unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
  if (base < 0 && exponent % 2 == 1) result = -result;
  return result;
}

unsigned dyadic_valuation(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("dyadic_valuation: argument must be positive");
  unsigned v = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++v;
  }
  return v;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

BinomialRow::BinomialRow(unsigned long n) : n_(n) {
  row_.reserve(n + 1);
  row_.emplace_back(1);
  for (unsigned long k = 1; k <= n; ++k) {
    Integer next = row_.back() * (n - k + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k);
    row_.push_back(std::move(next));
  }
}

const Integer& BinomialRow::operator()(long k) const {
  if (k < 0 || static_cast<unsigned long>(k) > n_) return zero_;
  return row_[static_cast<std::size_t>(k)];
}

}  // namespace regred
