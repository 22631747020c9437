#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regred/exact.hpp"

namespace regred {

/// Integer constants appearing in the explicit counting formulas.
///
/// Gathered in one struct so a verification sweep can run against a copy with
/// one constant perturbed and confirm that the sweep notices.
struct FormulaConstants {
  long catalan_offset = 1;          // C_n = binomial(2n, n) / (n + 1)
  long touchard_base = 2;           // C_{n+1} = sum_k C_k 2^(n-2k) binomial(n, 2k)
  long branch_middle = 2;           // [b(n+1-m) - 2 b(n-m) + b(n-1-m)]
  long branch_total_limit = 2;      // (2 - 2^(-v2(k)))
  long path_base = 4;               // 4^(r+1)
  long cdeg_mean_factor = 8;        // 8k (2^v2(k) - 1)
  long fringe_cubic = 2;            // (2 lambda^3 + lambda) / 3
  long fringe_divisor = 3;
  long total_fringe_numerator = 4;  // 4 / (3 * 4^n)

  static std::vector<std::string> names();
  /// Copy with bit `bit` of the named constant flipped; throws on an unknown name.
  FormulaConstants with_bit_flipped(std::string_view name, unsigned bit = 0) const;
};

inline const FormulaConstants kFormulaConstants{};

/// binomial(2n, n) / (n + 1) as an exact rational.
Rational catalan_formula(unsigned n, const FormulaConstants& c = kFormulaConstants);

/// Whether C_{n+1} = sum_{0 <= k <= n/2} C_k 2^(n-2k) binomial(n, 2k) holds exactly.
bool touchard_check(unsigned n, const FormulaConstants& c = kFormulaConstants);

/// Expected number of r-branches in a uniform binary tree with n >= 1 internal nodes.
Rational expected_r_branches(unsigned long n, unsigned r, const FormulaConstants& c = kFormulaConstants);

/// Expected total number of branches (all r) in a uniform binary tree of size n >= 1.
Rational expected_branches(unsigned long n, const FormulaConstants& c = kFormulaConstants);

/// Number of paths of length n >= 1 with compactification degree r.
Integer count_paths_cdeg(unsigned long n, unsigned r, const FormulaConstants& c = kFormulaConstants);

/// P(cdeg = r) for a uniform path of length n >= 1.
Rational prob_cdeg(unsigned long n, unsigned r, const FormulaConstants& c = kFormulaConstants);

/// Expected compactification degree, normalized by the 4^n paths of length n.
Rational expected_cdeg(unsigned long n, const FormulaConstants& c = kFormulaConstants);

/// Variance of the compactification degree from the exact distribution.
Rational var_cdeg(unsigned long n, const FormulaConstants& c = kFormulaConstants);

/// Expected size of the r-th fringe of a uniform path of length n >= 1.
Rational expected_fringe(unsigned long n, unsigned r, const FormulaConstants& c = kFormulaConstants);

/// Expected total fringe size sum_r E(r-th fringe); prefactor 4 / (3 * 4^n).
Rational expected_total_fringe(unsigned long n, const FormulaConstants& c = kFormulaConstants);

}  // namespace regred
