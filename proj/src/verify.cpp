#include "regred/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "regred/exact.hpp"
#include "regred/generating_functions.hpp"
#include "regred/oracle.hpp"
#include "regred/trees.hpp"

namespace regred {

namespace {

enum class Domain { Trees, Paths, None };

struct Entry {
  const char* name;
  Domain domain;
};

constexpr Entry kEntries[] = {
    {"catalan", Domain::Trees},          {"touchard", Domain::None},        {"register-reduction", Domain::Trees},
    {"r-branches", Domain::Trees},       {"branch-identity", Domain::Trees}, {"total-branches", Domain::Trees},
    {"cdeg-counts", Domain::Paths},      {"cdeg-mean", Domain::Paths},       {"fringe-mean", Domain::Paths},
    {"total-fringe", Domain::Paths},
};

const Entry& find_entry(std::string_view name) {
  for (const auto& e : kEntries) {
    if (name == e.name) return e;
  }
  throw std::invalid_argument("unknown verify statistic '" + std::string(name) + "'");
}

// Formula value as text, or the error message when a perturbed constant breaks it.
std::string formula_text(const std::function<std::string()>& formula) {
  try {
    return formula();
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

void add(VerifyReport& report, unsigned long n, std::string r, std::string expected, std::string observed) {
  const bool match = expected == observed;
  report.rows.push_back({n, std::move(r), std::move(expected), std::move(observed), match});
}

unsigned floor_log2(unsigned long x) {
  unsigned r = 0;
  while (x >>= 1) ++r;
  return r;
}

// Structural checks over every tree of size n; returns the number of trees that pass.
std::uint64_t count_passing(unsigned n, bool branch_identity) {
  std::uint64_t passing = 0;
  for_each_tree(n, [&](const BinaryTree& t) {
    const unsigned reg = register_function(t);
    bool ok = true;
    BinaryTree current = t;
    for (unsigned q = 0; q <= reg && ok; ++q) {
      if (branch_identity) {
        ok = count_r_branches(t, q) == current.leaf_count();
      } else {
        // Φ^q(t) is a leaf exactly when q = Reg(t), and each step lowers the register by one.
        ok = current.is_leaf() == (q == reg) && register_function(current) == reg - q;
      }
      if (q < reg) current = reduce_tree(current);
    }
    if (ok) ++passing;
  }, std::max(n, kDefaultTreeBound));
  return passing;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& row) { return row.match; });
}

const std::vector<std::string>& verify_statistics() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

unsigned verify_default_bound(std::string_view statistic) {
  switch (find_entry(statistic).domain) {
    case Domain::Trees: return 12;
    case Domain::Paths: return 10;
    case Domain::None: return 1000;
  }
  return 0;
}

VerifyReport verify_statistic(std::string_view statistic, unsigned nmax, const FormulaConstants& c, unsigned jobs,
                              unsigned bound) {
  const Entry& entry = find_entry(statistic);
  if (bound == 0) bound = verify_default_bound(statistic);
  if (nmax > bound) {
    throw std::out_of_range("verify " + std::string(statistic) + ": nmax " + std::to_string(nmax) +
                            " exceeds the brute-force bound " + std::to_string(bound));
  }
  VerifyReport report;
  report.statistic = entry.name;
  const std::string name = entry.name;

  if (name == "touchard") {
    for (unsigned n = 0; n <= nmax; ++n) {
      add(report, n, "", "true", formula_text([&] { return std::string(touchard_check(n, c) ? "true" : "false"); }));
    }
    return report;
  }
  if (name == "catalan") {
    const Series b = series_B(nmax);
    for (unsigned n = 0; n <= nmax; ++n) {
      std::uint64_t count = 0;
      TreeEnumerator trees(n, std::max(n, kDefaultTreeBound));
      while (trees.next()) ++count;
      const std::string counted = to_string(Integer(count));
      // The series coefficient must agree with the enumeration as well.
      const std::string observed = to_string(b[n]) == counted ? counted : "series " + to_string(b[n]);
      add(report, n, "", formula_text([&] { return to_string(catalan_formula(n, c)); }), observed);
    }
    return report;
  }
  if (name == "register-reduction" || name == "branch-identity") {
    for (unsigned n = 1; n <= nmax; ++n) {
      add(report, n, "", to_string(catalan(n)), to_string(Integer(count_passing(n, name == "branch-identity"))));
    }
    return report;
  }

  for (unsigned n = 1; n <= nmax; ++n) {
    if (entry.domain == Domain::Trees) {
      const auto census = tree_census(n, jobs, std::max(n, kDefaultTreeBound));
      if (name == "r-branches") {
        for (unsigned r = 0; r <= floor_log2(n + 1) + 1; ++r) {
          add(report, n, std::to_string(r), formula_text([&] { return to_string(expected_r_branches(n, r, c)); }),
              to_string(census.mean_r_branches(r)));
        }
      } else {
        add(report, n, "", formula_text([&] { return to_string(expected_branches(n, c)); }),
            to_string(census.mean_total_branches()));
      }
      continue;
    }
    const auto census = path_census(n, jobs, std::max(n, kDefaultPathBound));
    if (name == "cdeg-counts") {
      for (unsigned r = 0; r <= floor_log2(n) + 1; ++r) {
        add(report, n, std::to_string(r), formula_text([&] { return to_string(count_paths_cdeg(n, r, c)); }),
            to_string(Integer(census.count_with_cdeg(r))));
      }
      add(report, n, "all", to_string(power(4, n)), formula_text([&] {
            Integer sum = 0;
            for (unsigned r = 0; r <= floor_log2(n); ++r) sum += count_paths_cdeg(n, r, c);
            return to_string(sum);
          }));
    } else if (name == "cdeg-mean") {
      add(report, n, "", formula_text([&] { return to_string(expected_cdeg(n, c)); }), to_string(census.mean_cdeg()));
    } else if (name == "fringe-mean") {
      for (unsigned r = 0; r <= floor_log2(n) + 1; ++r) {
        add(report, n, std::to_string(r), formula_text([&] { return to_string(expected_fringe(n, r, c)); }),
            to_string(census.mean_fringe(r)));
      }
    } else {
      add(report, n, "", formula_text([&] { return to_string(expected_total_fringe(n, c)); }),
          to_string(census.mean_total_fringe()));
    }
  }
  return report;
}

}  // namespace regred
