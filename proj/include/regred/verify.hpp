#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regred/formulas.hpp"

namespace regred {

/// One formula-versus-oracle comparison.
struct VerifyRow {
  unsigned long n = 0;
  std::string r;          // register or degree, "all" for row sums, empty when not applicable
  std::string expected;   // formula side, exact text
  std::string observed;   // brute-force side, exact text
  bool match = false;
};

struct VerifyReport {
  std::string statistic;
  std::vector<VerifyRow> rows;
  bool ok() const;
};

/// Names accepted by verify_statistic, in a fixed order.
const std::vector<std::string>& verify_statistics();

/// Largest nmax the brute-force side of a statistic is allowed by default.
unsigned verify_default_bound(std::string_view statistic);

/// Compares the explicit formulas (evaluated with `constants`) with exhaustive
/// enumeration for every n in [1, nmax] (n from 0 for catalan and touchard).
/// A formula that throws under a perturbed constant counts as a mismatch.
/// Throws std::invalid_argument for an unknown statistic and std::out_of_range
/// when nmax exceeds `bound`.
VerifyReport verify_statistic(std::string_view statistic, unsigned nmax,
                              const FormulaConstants& constants = kFormulaConstants, unsigned jobs = 1,
                              unsigned bound = 0);

}  // namespace regred
