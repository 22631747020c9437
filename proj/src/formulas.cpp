#include "regred/formulas.hpp"

#include <stdexcept>

namespace regred {

namespace {

void require_positive(unsigned long n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

// 2^r, or 0 when it exceeds `limit` (so every lambda-sum is empty).
unsigned long scale_or_zero(unsigned r, unsigned long limit) {
  if (r >= 63) return 0;
  const unsigned long s = 1UL << r;
  return s > limit ? 0 : s;
}

// [binomial(2n, n+1-m) - middle binomial(2n, n-m) + binomial(2n, n-1-m)]
Integer tree_bracket(const BinomialRow& row, long n, long m, long middle) {
  return row(n + 1 - m) - middle * row(n - m) + row(n - 1 - m);
}

// [binomial(2n-1, n-m) - binomial(2n-1, n-m-1)]
Integer path_bracket(const BinomialRow& row, long n, long m) { return row(n - m) - row(n - m - 1); }

Rational two_power(long exponent) {
  Rational r(power(2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent)));
  return exponent < 0 ? 1 / r : r;
}

}  // namespace

std::vector<std::string> FormulaConstants::names() {
  return {"catalan_offset",  "touchard_base",    "branch_middle",  "branch_total_limit",    "path_base",
          "cdeg_mean_factor", "fringe_cubic", "fringe_divisor", "total_fringe_numerator"};
}

FormulaConstants FormulaConstants::with_bit_flipped(std::string_view name, unsigned bit) const {
  FormulaConstants copy = *this;
  long* target = nullptr;
  if (name == "catalan_offset") target = &copy.catalan_offset;
  else if (name == "touchard_base") target = &copy.touchard_base;
  else if (name == "branch_middle") target = &copy.branch_middle;
  else if (name == "branch_total_limit") target = &copy.branch_total_limit;
  else if (name == "path_base") target = &copy.path_base;
  else if (name == "cdeg_mean_factor") target = &copy.cdeg_mean_factor;
  else if (name == "fringe_cubic") target = &copy.fringe_cubic;
  else if (name == "fringe_divisor") target = &copy.fringe_divisor;
  else if (name == "total_fringe_numerator") target = &copy.total_fringe_numerator;
  if (target == nullptr) throw std::invalid_argument("unknown formula constant '" + std::string(name) + "'");
  *target ^= (1L << bit);
  return copy;
}

Rational catalan_formula(unsigned n, const FormulaConstants& c) {
  const long denominator = static_cast<long>(n) + c.catalan_offset;
  if (denominator == 0) throw std::domain_error("catalan_formula: zero denominator");
  return make_rational(binomial(2L * n, n), Integer(denominator));
}

bool touchard_check(unsigned n, const FormulaConstants& c) {
  Integer sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) sum += catalan(k) * power(c.touchard_base, n - 2 * k) * binomial(n, 2L * k);
  return sum == catalan(n + 1);
}

Rational expected_r_branches(unsigned long n, unsigned r, const FormulaConstants& c) {
  require_positive(n, "expected_r_branches");
  const unsigned long step = scale_or_zero(r, n + 1);
  if (step == 0) return 0;
  const BinomialRow row(2 * n);
  const long nn = static_cast<long>(n);
  Integer sum = 0;
  for (unsigned long lambda = 1; lambda * step <= n + 1; ++lambda) {
    sum += static_cast<long>(lambda) * tree_bracket(row, nn, static_cast<long>(lambda * step), c.branch_middle);
  }
  return make_rational(sum * (n + 1), row(nn));
}

Rational expected_branches(unsigned long n, const FormulaConstants& c) {
  require_positive(n, "expected_branches");
  const BinomialRow row(2 * n);
  const long nn = static_cast<long>(n);
  Rational sum = 0;
  for (unsigned long k = 1; k <= n + 1; ++k) {
    const Rational weight = c.branch_total_limit - 1 / two_power(dyadic_valuation(k));
    sum += weight * static_cast<long>(k) * Rational(tree_bracket(row, nn, static_cast<long>(k), c.branch_middle));
  }
  return sum * make_rational(Integer(n + 1), row(nn));
}

Integer count_paths_cdeg(unsigned long n, unsigned r, const FormulaConstants& c) {
  require_positive(n, "count_paths_cdeg");
  const unsigned long step = scale_or_zero(r, n);
  if (step == 0) return 0;
  const BinomialRow row(2 * n - 1);
  const long nn = static_cast<long>(n);
  Integer sum = 0;
  for (unsigned long lambda = 1; lambda * step <= n; ++lambda) {
    const Integer term = static_cast<long>(lambda) * path_bracket(row, nn, static_cast<long>(lambda * step));
    if (lambda % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return power(c.path_base, r + 1UL) * sum;
}

Rational prob_cdeg(unsigned long n, unsigned r, const FormulaConstants& c) {
  return make_rational(count_paths_cdeg(n, r, c), power(4, n));
}

Rational expected_cdeg(unsigned long n, const FormulaConstants& c) {
  require_positive(n, "expected_cdeg");
  const BinomialRow row(2 * n - 1);
  const long nn = static_cast<long>(n);
  Integer sum = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    const Integer weight = c.cdeg_mean_factor * static_cast<long>(k) * (power(2, dyadic_valuation(k)) - 1);
    sum += weight * path_bracket(row, nn, static_cast<long>(k));
  }
  return make_rational(sum, power(4, n));
}

Rational var_cdeg(unsigned long n, const FormulaConstants& c) {
  require_positive(n, "var_cdeg");
  Rational first = 0;
  Rational second = 0;
  for (unsigned r = 1; (1UL << r) <= n; ++r) {
    const Rational p = prob_cdeg(n, r, c);
    first += r * p;
    second += r * r * p;
  }
  return second - first * first;
}

Rational expected_fringe(unsigned long n, unsigned r, const FormulaConstants& c) {
  require_positive(n, "expected_fringe");
  const unsigned long step = scale_or_zero(r, n);
  if (step == 0) return 0;
  const BinomialRow row(2 * n - 1);
  const long nn = static_cast<long>(n);
  Integer sum = 0;
  for (unsigned long lambda = 1; lambda * step <= n; ++lambda) {
    const Integer l(static_cast<long>(lambda));
    sum += (c.fringe_cubic * l * l * l + l) * path_bracket(row, nn, static_cast<long>(lambda * step));
  }
  return make_rational(power(c.path_base, r + 1UL) * sum, c.fringe_divisor * power(4, n));
}

Rational expected_total_fringe(unsigned long n, const FormulaConstants& c) {
  require_positive(n, "expected_total_fringe");
  const BinomialRow row(2 * n - 1);
  const long nn = static_cast<long>(n);
  Rational sum = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    const unsigned v = dyadic_valuation(k);
    const Integer kk(static_cast<long>(k));
    const Rational weight = c.fringe_cubic * Rational(kk * kk * kk) * (2 - 1 / two_power(v)) +
                            Rational(kk * (power(2, v + 1) - 1));
    sum += weight * Rational(path_bracket(row, nn, static_cast<long>(k)));
  }
  return sum * make_rational(Integer(c.total_fringe_numerator), c.fringe_divisor * power(4, n));
}

}  // namespace regred
