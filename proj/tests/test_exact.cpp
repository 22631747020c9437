#include <vector>

#include "doctest.h"
#include "regred/exact.hpp"
#include "regred/formulas.hpp"
#include "regred/oracle.hpp"

using namespace regred;

namespace {

// Pascal's triangle by addition only.
std::vector<std::vector<Integer>> pascal(unsigned rows) {
  std::vector<std::vector<Integer>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

// Catalan numbers from the convolution C_{n+1} = sum C_k C_{n-k}.
std::vector<Integer> catalan_by_convolution(unsigned n) {
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  }
  return c;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  const auto t = pascal(60);
  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == t[n][k]);
  }
  const Integer big = binomial(4000, 2000);
  CHECK(big == binomial(3999, 1999) + binomial(3999, 2000));
  CHECK(mpz_sizeinbase(big.get_mpz_t(), 10) == 1203);
}

TEST_CASE("binomial row") {
  const BinomialRow row(61);
  for (long k = -3; k <= 64; ++k) REQUIRE(row(k) == binomial(61, k));
  const BinomialRow big(4000);
  CHECK(big(2000) == binomial(4000, 2000));
  CHECK(big(1234) == binomial(4000, 1234));
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(catalan(12) == 208012);
  const auto c = catalan_by_convolution(80);
  for (unsigned n = 0; n <= 80; ++n) {
    REQUIRE(catalan(n) == c[n]);
    REQUIRE(catalan_formula(n) == Rational(c[n]));
  }
}

TEST_CASE("rationals are canonical") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(Integer(-17)) == "-17");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(to_double(make_rational(1, 3)) == doctest::Approx(1.0 / 3.0));
  CHECK(power(4, 0) == 1);
  CHECK(power(2, 100) == Integer("1267650600228229401496703205376"));
}

TEST_CASE("dyadic valuation") {
  CHECK(dyadic_valuation(1) == 0);
  CHECK(dyadic_valuation(8) == 3);
  CHECK(dyadic_valuation(12) == 2);
  CHECK(dyadic_valuation(std::uint64_t{1} << 63) == 63);
  CHECK_THROWS(dyadic_valuation(0));
}

TEST_CASE("touchard identity") {
  for (unsigned n = 0; n <= 60; ++n) REQUIRE(touchard_check(n));
  const auto broken = kFormulaConstants.with_bit_flipped("touchard_base");
  CHECK(!touchard_check(4, broken));
}

TEST_CASE("small formula values") {
  CHECK(count_paths_cdeg(1, 0) == 4);
  CHECK(count_paths_cdeg(2, 1) == 16);
  CHECK(count_paths_cdeg(4, 2) == 64);
  CHECK(count_paths_cdeg(4, 1) == 192);
  CHECK(expected_cdeg(1) == 0);
  CHECK(expected_branches(1) == 3);
  CHECK(expected_total_fringe(1) == 1);
  CHECK(expected_total_fringe(10) == make_rational(1765, 128));
  for (unsigned long n = 1; n <= 12; ++n) {
    CHECK(expected_r_branches(n, 0) == Rational(Integer(n + 1)));
    CHECK(expected_fringe(n, 0) == Rational(Integer(n)));
  }
  CHECK(expected_r_branches(6, 3) == 0);   // 2^3 > 7
  CHECK(expected_fringe(7, 3) == 0);       // 2^3 > 7
  CHECK(count_paths_cdeg(7, 3) == 0);
  CHECK_THROWS_AS(expected_branches(0), std::invalid_argument);
  CHECK_THROWS_AS(count_paths_cdeg(0, 0), std::invalid_argument);
}

TEST_CASE("row sums and total probability") {
  for (unsigned long n = 1; n <= 200; n += (n < 20 ? 1 : 17)) {
    Integer sum = 0;
    Rational p = 0;
    Rational mean = 0;
    for (unsigned r = 0; (1UL << r) <= n; ++r) {
      sum += count_paths_cdeg(n, r);
      p += prob_cdeg(n, r);
      mean += r * prob_cdeg(n, r);
    }
    REQUIRE(sum == power(4, n));
    REQUIRE(p == 1);
    REQUIRE(mean == expected_cdeg(n));
  }
}

TEST_CASE("total fringe is the sum of fringe expectations") {
  for (unsigned long n = 1; n <= 64; ++n) {
    Rational sum = 0;
    for (unsigned r = 0; (1UL << r) <= n; ++r) sum += expected_fringe(n, r);
    REQUIRE(sum == expected_total_fringe(n));
  }
}

TEST_CASE("total branches is the sum of r-branch expectations") {
  for (unsigned long n = 1; n <= 64; ++n) {
    Rational sum = 0;
    for (unsigned r = 0; (1UL << r) <= n + 1; ++r) sum += expected_r_branches(n, r);
    REQUIRE(sum == expected_branches(n));
  }
}

TEST_CASE("formulas equal brute force on trees, n <= 9") {
  for (unsigned n = 1; n <= 9; ++n) {
    const auto census = tree_census(n, 2);
    CHECK(Integer(census.trees) == catalan(n));
    for (unsigned r = 0; r < census.branch_sum.size() + 1; ++r) {
      REQUIRE(expected_r_branches(n, r) == census.mean_r_branches(r));
    }
    REQUIRE(expected_branches(n) == census.mean_total_branches());
  }
}

TEST_CASE("formulas equal brute force on paths, n <= 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto census = path_census(n, 2);
    for (unsigned r = 0; r <= 4; ++r) {
      REQUIRE(Integer(census.count_with_cdeg(r)) == count_paths_cdeg(n, r));
      REQUIRE(expected_fringe(n, r) == census.mean_fringe(r));
    }
    REQUIRE(expected_cdeg(n) == census.mean_cdeg());
    REQUIRE(var_cdeg(n) == census.var_cdeg());
    REQUIRE(expected_total_fringe(n) == census.mean_total_fringe());
  }
}

TEST_CASE("every constant flip changes some formula value") {
  for (const auto& name : FormulaConstants::names()) {
    const auto c = kFormulaConstants.with_bit_flipped(name);
    bool changed = false;
    for (unsigned n = 1; n <= 8 && !changed; ++n) {
      changed = catalan_formula(n, c) != catalan_formula(n) || !touchard_check(n, c) ||
                expected_r_branches(n, 1, c) != expected_r_branches(n, 1) ||
                expected_branches(n, c) != expected_branches(n) ||
                count_paths_cdeg(n, 1, c) != count_paths_cdeg(n, 1) || expected_cdeg(n, c) != expected_cdeg(n) ||
                expected_fringe(n, 1, c) != expected_fringe(n, 1) ||
                expected_total_fringe(n, c) != expected_total_fringe(n);
    }
    CHECK_MESSAGE(changed, name);
  }
  CHECK_THROWS_AS(kFormulaConstants.with_bit_flipped("no_such_constant"), std::invalid_argument);
}
