#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace regred {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the convention binomial(n, k) = 0 unless 0 <= k <= n.
Integer binomial(long n, long k);

Integer catalan(unsigned n);

/// numerator / denominator in lowest terms; denominator must be nonzero.
Rational make_rational(const Integer& numerator, const Integer& denominator);

Integer power(long base, unsigned long exponent);

/// Largest v with 2^v dividing k; k must be positive.
unsigned dyadic_valuation(std::uint64_t k);

/// Lossless text form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// One row of Pascal's triangle, binomial(n, k) for all k, with zeros outside [0, n].
/// Built incrementally so a sum over k costs one bignum division per entry.
class BinomialRow {
 public:
  explicit BinomialRow(unsigned long n);

  unsigned long n() const { return n_; }
  const Integer& operator()(long k) const;

 private:
  unsigned long n_;
  std::vector<Integer> row_;
  Integer zero_{0};
};

}  // namespace regred
