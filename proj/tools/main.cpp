// regred: command-line front end for the register-function and lattice-path library.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regred/asymptotics.hpp"
#include "regred/error.hpp"
#include "regred/exact.hpp"
#include "regred/formulas.hpp"
#include "regred/generating_functions.hpp"
#include "regred/montecarlo.hpp"
#include "regred/oracle.hpp"
#include "regred/paths.hpp"
#include "regred/trees.hpp"
#include "regred/verify.hpp"

#ifndef REGRED_VERSION
#define REGRED_VERSION "0.0.0"
#endif

using namespace regred;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

// Flag values that parse but make no sense (unknown statistic, missing --r, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Cell = std::variant<std::monostate, std::string, long long, double, bool>;

struct Table {
  std::string command;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<std::uint64_t> seed;
  std::string generator;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16g", x);
  return buffer;
}

std::string csv_field(const Cell& cell) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, cell);
}

Json json_value(const Cell& cell) {
  struct {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const std::string& s) const { return s; }
    Json operator()(long long v) const { return v; }
    Json operator()(double v) const { return std::isfinite(v) ? Json(v) : Json(nullptr); }
    Json operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

void write_table(const Table& table, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json doc;
    doc["command"] = table.command;
    doc["parameters"] = table.parameters;
    Json records = Json::array();
    for (const auto& row : table.rows) {
      Json record = Json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) record[table.columns[i]] = json_value(row[i]);
      records.push_back(std::move(record));
    }
    doc["records"] = std::move(records);
    doc["metadata"] = {{"version", REGRED_VERSION},
                       {"seed", table.seed ? Json(*table.seed) : Json(nullptr)},
                       {"generator", table.generator.empty() ? Json(nullptr) : Json(table.generator)}};
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

Cell rational_cell(const Rational& q) { return to_string(q); }
Cell integer_cell(std::uint64_t v) { return static_cast<long long>(v); }

// ---------------------------------------------------------------------------
// tree and path

Table tree_command(const std::string& action, const std::string& text, bool steps) {
  const BinaryTree tree = BinaryTree::parse(text);
  Table table;
  table.command = "tree " + action;
  table.parameters = {{"tree", text}, {"steps", steps}};
  if (action == "reduce" || (action == "register" && steps)) {
    if (action == "reduce" && tree.is_leaf()) throw UsageError("a leaf cannot be reduced");
    table.columns = {"step", "tree", "size", "register"};
    BinaryTree current = tree;
    for (unsigned step = 0;; ++step) {
      if (steps || step == 1) {
        table.add({static_cast<long long>(step), current.encode(), integer_cell(current.size()),
                   static_cast<long long>(register_function(current))});
      }
      if (current.is_leaf() || (!steps && step == 1)) break;
      current = reduce_tree(current);
    }
  } else if (action == "register") {
    table.columns = {"tree", "register"};
    table.add({text, static_cast<long long>(register_function(tree))});
  } else {
    table.columns = {"r", "branches", "nodes"};
    const BranchProfile profile = branch_profile(tree);
    std::uint64_t total = 0, nodes = 0;
    for (std::size_t r = 0; r < profile.counts.size(); ++r) {
      table.add({std::to_string(r), integer_cell(profile.counts[r]), integer_cell(profile.node_counts[r])});
      total += profile.counts[r];
      nodes += profile.node_counts[r];
    }
    table.add({std::string("total"), integer_cell(total), integer_cell(nodes)});
  }
  return table;
}

Table path_command(const std::string& action, const std::string& text, bool steps) {
  const LatticePath path = LatticePath::parse(text);
  Table table;
  table.command = "path " + action;
  table.parameters = {{"path", text}, {"steps", steps}};
  if (action == "reduce" || (action == "cdeg" && steps)) {
    if (action == "reduce" && path.size() < 2) throw UsageError("a single step cannot be reduced");
    table.columns = {"step", "path", "normalized", "length"};
    LatticePath current = path;
    for (unsigned step = 0;; ++step) {
      const bool last = current.size() < 2;
      if (steps || step == 1) {
        table.add({static_cast<long long>(step), current.str(), last ? Cell{} : Cell{normalize(current).path.str()},
                   integer_cell(current.size())});
      }
      if (last || (!steps && step == 1)) break;
      current = reduce_path(current);
    }
  } else if (action == "cdeg") {
    table.columns = {"path", "cdeg"};
    table.add({text, static_cast<long long>(cdeg(path))});
  } else {
    table.columns = {"r", "size", "fringe"};
    LatticePath current = path;
    const auto sizes = fringe_sizes(path);
    for (std::size_t r = 0; r < sizes.size(); ++r) {
      table.add({std::to_string(r), integer_cell(sizes[r]), current.str()});
      if (current.size() >= 2) current = reduce_path(current);
    }
    table.add({std::string("total"), integer_cell(total_fringe_size(path)), Cell{}});
  }
  return table;
}

// ---------------------------------------------------------------------------
// exact formulas and brute-force oracles

struct Query {
  unsigned long n = 0;
  std::optional<unsigned> r;
  unsigned jobs = 1;
  std::optional<unsigned> unsafe_bound;
};

unsigned need_r(const Query& q, const std::string& statistic) {
  if (!q.r) throw UsageError(statistic + " needs --r");
  return *q.r;
}

struct ExactEntry {
  bool needs_r;
  std::function<Cell(unsigned long, unsigned)> value;
  std::function<double(unsigned long, unsigned)> as_double;
};

template <class F>
ExactEntry rational_entry(bool needs_r, F f) {
  return {needs_r, [f](unsigned long n, unsigned r) { return rational_cell(Rational(f(n, r))); },
          [f](unsigned long n, unsigned r) { return to_double(Rational(f(n, r))); }};
}

const std::map<std::string, ExactEntry>& exact_entries() {
  static const std::map<std::string, ExactEntry> entries = [] {
    std::map<std::string, ExactEntry> m;
    m["catalan"] = rational_entry(false, [](unsigned long n, unsigned) { return catalan_formula(n); });
    m["touchard"] = {false, [](unsigned long n, unsigned) { return Cell{touchard_check(n)}; },
                     [](unsigned long n, unsigned) { return touchard_check(n) ? 1.0 : 0.0; }};
    m["r-branches"] = rational_entry(true, [](unsigned long n, unsigned r) { return expected_r_branches(n, r); });
    m["r-branches-var"] = rational_entry(true, [](unsigned long n, unsigned r) { return var_r_branches_exact(n, r); });
    m["total-branches"] = rational_entry(false, [](unsigned long n, unsigned) { return expected_branches(n); });
    m["cdeg-count"] = rational_entry(true, [](unsigned long n, unsigned r) { return count_paths_cdeg(n, r); });
    m["cdeg-prob"] = rational_entry(true, [](unsigned long n, unsigned r) { return prob_cdeg(n, r); });
    m["cdeg-mean"] = rational_entry(false, [](unsigned long n, unsigned) { return expected_cdeg(n); });
    m["cdeg-var"] = rational_entry(false, [](unsigned long n, unsigned) { return var_cdeg(n); });
    m["fringe-mean"] = rational_entry(true, [](unsigned long n, unsigned r) { return expected_fringe(n, r); });
    m["fringe-var"] = rational_entry(true, [](unsigned long n, unsigned r) { return var_fringe_exact(n, r); });
    m["total-fringe"] = rational_entry(false, [](unsigned long n, unsigned) { return expected_total_fringe(n); });
    return m;
  }();
  return entries;
}

std::string known(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

Table exact_command(const std::string& statistic, const Query& q) {
  const auto& entries = exact_entries();
  const auto it = entries.find(statistic);
  if (it == entries.end()) {
    throw UsageError("unknown statistic '" + statistic + "' (known: " + known(keys(entries)) + ")");
  }
  const unsigned r = it->second.needs_r ? need_r(q, statistic) : 0;
  Table table;
  table.command = "exact";
  table.parameters = {{"statistic", statistic}, {"n", q.n}};
  if (it->second.needs_r) table.parameters["r"] = r;
  table.columns = {"statistic", "n", "r", "exact", "float"};
  const Cell value = it->second.value(q.n, r);
  table.add({statistic, static_cast<long long>(q.n), it->second.needs_r ? Cell{static_cast<long long>(r)} : Cell{},
             value, it->second.as_double(q.n, r)});
  return table;
}

Table oracle_command(const std::string& statistic, const Query& q) {
  static const std::vector<std::string> tree_stats = {"catalan", "register-count", "r-branches", "r-branches-var",
                                                      "total-branches", "total-branches-var"};
  static const std::vector<std::string> path_stats = {"cdeg-count", "cdeg-mean", "cdeg-var", "fringe-mean",
                                                      "fringe-var", "total-fringe"};
  const bool on_trees = std::find(tree_stats.begin(), tree_stats.end(), statistic) != tree_stats.end();
  const bool on_paths = std::find(path_stats.begin(), path_stats.end(), statistic) != path_stats.end();
  if (!on_trees && !on_paths) {
    std::vector<std::string> all = tree_stats;
    all.insert(all.end(), path_stats.begin(), path_stats.end());
    throw UsageError("unknown statistic '" + statistic + "' (known: " + known(all) + ")");
  }
  const unsigned bound = q.unsafe_bound.value_or(on_trees ? 12u : 10u);
  if (q.n > bound) {
    throw std::out_of_range("oracle " + statistic + ": n " + std::to_string(q.n) + " exceeds the brute-force bound " +
                            std::to_string(bound) + " (raise it with --unsafe-bound)");
  }
  const bool needs_r = statistic == "register-count" || statistic == "r-branches" || statistic == "r-branches-var" ||
                       statistic == "cdeg-count" || statistic == "fringe-mean" || statistic == "fringe-var";
  const unsigned r = needs_r ? need_r(q, statistic) : 0;
  const auto n = static_cast<unsigned>(q.n);
  Rational value;
  if (on_trees) {
    const TreeCensus c = tree_census(n, q.jobs, std::max(bound, kDefaultTreeBound));
    if (statistic == "catalan") value = Rational(Integer(c.trees));
    else if (statistic == "register-count") value = Rational(Integer(c.count_with_register(r)));
    else if (statistic == "r-branches") value = c.mean_r_branches(r);
    else if (statistic == "r-branches-var") value = c.var_r_branches(r);
    else if (statistic == "total-branches") value = c.mean_total_branches();
    else value = c.var_total_branches();
  } else {
    const PathCensus c = path_census(n, q.jobs, std::max(bound, kDefaultPathBound));
    if (statistic == "cdeg-count") value = Rational(Integer(c.count_with_cdeg(r)));
    else if (statistic == "cdeg-mean") value = c.mean_cdeg();
    else if (statistic == "cdeg-var") value = c.var_cdeg();
    else if (statistic == "fringe-mean") value = c.mean_fringe(r);
    else if (statistic == "fringe-var") value = c.var_fringe(r);
    else value = c.mean_total_fringe();
  }
  Table table;
  table.command = "oracle";
  table.parameters = {{"statistic", statistic}, {"n", q.n}};
  if (needs_r) table.parameters["r"] = r;
  table.columns = {"statistic", "n", "r", "oracle", "float"};
  table.add({statistic, static_cast<long long>(q.n), needs_r ? Cell{static_cast<long long>(r)} : Cell{},
             rational_cell(value), to_double(value)});
  return table;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string statistic;
  unsigned nmax = 0;
  std::string mutate;
  unsigned jobs = 1;
  std::optional<unsigned> unsafe_bound;
};

FormulaConstants mutated_constants(const std::string& spec) {
  if (spec.empty()) return kFormulaConstants;
  std::string name = spec;
  unsigned bit = 0;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    const std::string digits = spec.substr(colon + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2) {
      throw UsageError("--mutate expects name[:bit], got '" + spec + "'");
    }
    bit = static_cast<unsigned>(std::stoul(digits));
  }
  const auto names = FormulaConstants::names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("unknown constant '" + name + "' (known: " + known(names) + ")");
  }
  return kFormulaConstants.with_bit_flipped(name, bit);
}

std::pair<Table, bool> verify_command(const VerifyOptions& o) {
  const FormulaConstants constants = mutated_constants(o.mutate);
  std::vector<std::string> statistics;
  if (o.statistic == "all") {
    statistics = verify_statistics();
  } else {
    const auto& names = verify_statistics();
    if (std::find(names.begin(), names.end(), o.statistic) == names.end()) {
      throw UsageError("unknown statistic '" + o.statistic + "' (known: all, " + known(names) + ")");
    }
    statistics = {o.statistic};
  }
  Table table;
  table.command = "verify";
  table.parameters = {{"statistic", o.statistic}, {"nmax", o.nmax}};
  if (!o.mutate.empty()) table.parameters["mutate"] = o.mutate;
  table.columns = {"statistic", "n", "r", "expected", "observed", "match"};
  bool ok = true;
  for (const auto& s : statistics) {
    const unsigned bound = o.unsafe_bound.value_or(verify_default_bound(s));
    const VerifyReport report = verify_statistic(s, o.nmax, constants, o.jobs, bound);
    for (const auto& row : report.rows) {
      table.add({s, static_cast<long long>(row.n), row.r.empty() ? Cell{} : Cell{row.r}, row.expected, row.observed,
                 row.match});
    }
    ok = ok && report.ok();
  }
  return {table, ok};
}

// ---------------------------------------------------------------------------
// asymptotics and fluctuations

// Exact values are only attempted up to this size; beyond it the exact columns stay empty.
constexpr unsigned long kExactLimit = 4096;

Table asym_command(const std::string& expansion, const Query& q, unsigned terms) {
  using Pair = std::pair<AsymptoticEstimate, std::function<Rational()>>;
  const unsigned long n = q.n;
  const bool needs_r = expansion == "r-branches-mean" || expansion == "r-branches-var" || expansion == "fringe-mean" ||
                       expansion == "fringe-var";
  static const std::vector<std::string> names = {"r-branches-mean", "r-branches-var", "total-branches", "cdeg-mean",
                                                 "cdeg-var",        "fringe-mean",    "fringe-var",     "total-fringe"};
  if (std::find(names.begin(), names.end(), expansion) == names.end()) {
    throw UsageError("unknown expansion '" + expansion + "' (known: " + known(names) + ")");
  }
  const unsigned r = needs_r ? need_r(q, expansion) : 0;
  if (n == 0) throw UsageError("--n must be positive");
  Pair p;
  if (expansion == "r-branches-mean") p = {asym_expected_r_branches(n, r), [=] { return expected_r_branches(n, r); }};
  else if (expansion == "r-branches-var") p = {asym_var_r_branches(n, r), [=] { return var_r_branches_exact(n, r); }};
  else if (expansion == "total-branches") p = {asym_expected_branches(n, terms), [=] { return expected_branches(n); }};
  else if (expansion == "cdeg-mean") p = {asym_expected_cdeg_smooth(n), [=] { return expected_cdeg(n); }};
  else if (expansion == "cdeg-var") p = {asym_var_cdeg_smooth(n), [=] { return var_cdeg(n); }};
  else if (expansion == "fringe-mean") p = {asym_fringe(n, r).first, [=] { return expected_fringe(n, r); }};
  else if (expansion == "fringe-var") p = {asym_fringe(n, r).second, [=] { return var_fringe_exact(n, r); }};
  else p = {asym_total_fringe(n, terms), [=] { return expected_total_fringe(n); }};

  Table table;
  table.command = "asym";
  table.parameters = {{"expansion", expansion}, {"n", n}, {"terms", terms}};
  if (needs_r) table.parameters["r"] = r;
  table.columns = {"expansion", "n", "r", "terms", "asymptotic", "exact", "exact_float", "residual", "error_order"};
  Cell exact, exact_float, residual;
  if (n <= kExactLimit) {
    const Rational value = p.second();
    exact = rational_cell(value);
    exact_float = to_double(value);
    residual = to_double(value) - p.first.value;
  }
  table.add({expansion, static_cast<long long>(n), needs_r ? Cell{static_cast<long long>(r)} : Cell{},
             static_cast<long long>(terms), p.first.value, exact, exact_float, residual, p.first.error.describe()});
  return table;
}

struct FluctuationOptions {
  std::string which;
  unsigned long nmin = 0, nmax = 0;
  unsigned terms = kDefaultFourierTerms;
  unsigned per_octave = 8;
};

Table fluctuation_command(const FluctuationOptions& o) {
  std::function<double(unsigned long)> exact, smooth;
  std::optional<FluctuationSeries> series;
  if (o.which == "branches") {
    exact = [](unsigned long n) { return to_double(expected_branches(n)); };
    smooth = [](unsigned long n) { return branches_smooth(static_cast<double>(n)); };
    series = branches_fluctuation(o.terms);
  } else if (o.which == "total-fringe") {
    exact = [](unsigned long n) { return to_double(expected_total_fringe(n)); };
    smooth = [](unsigned long n) { return total_fringe_smooth(static_cast<double>(n)); };
    series = fringe_fluctuation(o.terms);
  } else if (o.which == "cdeg-mean") {
    exact = [](unsigned long n) { return to_double(expected_cdeg(n)); };
    smooth = [](unsigned long n) { return asym_expected_cdeg_smooth(n).value; };
  } else if (o.which == "cdeg-var") {
    exact = [](unsigned long n) { return to_double(var_cdeg(n)); };
    smooth = [](unsigned long n) { return asym_var_cdeg_smooth(n).value; };
  } else {
    throw UsageError("unknown fluctuation '" + o.which + "' (known: branches, total-fringe, cdeg-mean, cdeg-var)");
  }
  if (o.nmin == 0 || o.nmin > o.nmax) throw UsageError("need 0 < --nmin <= --nmax");
  if (o.nmax > kExactLimit) throw std::out_of_range("--nmax exceeds " + std::to_string(kExactLimit));
  if (o.per_octave == 0) throw UsageError("--per-octave must be positive");
  const auto grid = geometric_grid(o.nmin, o.nmax, o.per_octave);
  Table table;
  table.command = "fluctuation";
  table.parameters = {{"which", o.which}, {"nmin", o.nmin}, {"nmax", o.nmax}, {"terms", o.terms},
                      {"per_octave", o.per_octave}};
  table.columns = {"n", "phase", "residual", "fourier"};
  for (const auto& point : empirical_fluctuation(exact, smooth, grid)) {
    table.add({static_cast<long long>(point.n), point.phase, point.residual,
               series ? Cell{(*series)(point.phase)} : Cell{}});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Monte Carlo

struct McOptions {
  std::string statistic;
  unsigned n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<unsigned> r;
  unsigned jobs = 1;
};

std::pair<Table, bool> mc_command(const McOptions& o) {
  Table table;
  table.generator = "mt19937_64";
  table.seed = o.seed;
  if (o.samples == 0) throw UsageError("--samples must be positive");
  if (o.n == 0) throw UsageError("--n must be positive");
  if (o.statistic == "normality") {
    if (!o.r) throw UsageError("normality needs --r");
    if (*o.r == 0) throw UsageError("normality needs --r >= 1");
    const NormalityResult result = normality_test(*o.r, o.n, o.samples, o.seed, o.jobs);
    table.command = "mc normality";
    table.parameters = {{"r", *o.r}, {"n", o.n}, {"samples", o.samples}, {"seed", o.seed}};
    table.columns = {"r",           "n",           "samples",         "ks",           "threshold",
                     "pass",        "sample_mean", "sample_variance", "reference_mean", "reference_variance"};
    table.add({static_cast<long long>(*o.r), static_cast<long long>(o.n), integer_cell(o.samples), result.ks_statistic,
               result.threshold, result.pass, result.summary.mean, result.summary.variance, result.mean,
               result.variance});
    return {table, result.pass};
  }
  Statistic statistic;
  try {
    statistic = Statistic::parse(o.r && o.statistic.find(':') == std::string::npos &&
                                         (o.statistic == "r-branches" || o.statistic == "fringe")
                                     ? o.statistic + ":" + std::to_string(*o.r)
                                     : o.statistic);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SampleSummary s = sample_statistic(statistic, o.n, o.samples, o.seed, o.jobs);
  table.command = "mc";
  table.parameters = {{"statistic", statistic.name()}, {"n", o.n}, {"samples", o.samples}, {"seed", o.seed}};
  table.columns = {"statistic", "n", "samples", "mean", "variance", "standard_error", "exact", "exact_float"};
  Rational exact;
  switch (statistic.kind) {
    case Statistic::Kind::RBranches: exact = expected_r_branches(o.n, statistic.r); break;
    case Statistic::Kind::TotalBranches: exact = expected_branches(o.n); break;
    case Statistic::Kind::Cdeg: exact = expected_cdeg(o.n); break;
    case Statistic::Kind::Fringe: exact = expected_fringe(o.n, statistic.r); break;
    case Statistic::Kind::TotalFringe: exact = expected_total_fringe(o.n); break;
  }
  table.add({statistic.name(), static_cast<long long>(o.n), integer_cell(s.count), s.mean, s.variance,
             std::sqrt(s.variance / static_cast<double>(s.count)), rational_cell(exact), to_double(exact)});
  return {table, true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Register function, tree compactification and lattice path reduction toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", REGRED_VERSION);
  std::string format = "csv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("REGRED_FORMAT");

  // The selected command fills `table`; `passed` is false for verification failures.
  std::function<std::pair<Table, bool>()> action;
  std::string out_file;

  std::string object_text;
  bool steps = false;
  auto* tree = app.add_subcommand("tree", "Single-tree queries")->require_subcommand(1);
  auto* path = app.add_subcommand("path", "Single-path queries")->require_subcommand(1);
  for (const char* name : {"reduce", "register", "branches"}) {
    auto* sub = tree->add_subcommand(name, std::string("tree ") + name);
    sub->add_option("tree", object_text, "Tree as nested parentheses, '.' for a leaf")->required();
    if (std::string(name) != "branches") sub->add_flag("--steps", steps, "Trace every reduction step");
    sub->callback([&, name] { action = [&, name] { return std::pair{tree_command(name, object_text, steps), true}; }; });
  }
  for (const char* name : {"reduce", "cdeg", "fringes"}) {
    auto* sub = path->add_subcommand(name, std::string("path ") + name);
    sub->add_option("path", object_text, "Path as a word over U, R, D, L")->required();
    if (std::string(name) != "fringes") sub->add_flag("--steps", steps, "Trace every reduction step");
    sub->callback([&, name] { action = [&, name] { return std::pair{path_command(name, object_text, steps), true}; }; });
  }

  std::string statistic;
  Query query;
  unsigned r_value = 0, bound_value = 0;
  std::vector<CLI::Option*> r_options, bound_options;
  auto finish_query = [&] {
    query.r.reset();
    for (auto* o : r_options) {
      if (o->count()) query.r = r_value;
    }
    query.unsafe_bound.reset();
    for (auto* o : bound_options) {
      if (o->count()) query.unsafe_bound = bound_value;
    }
  };

  auto* exact = app.add_subcommand("exact", "Evaluate an exact formula");
  exact->add_option("statistic", statistic, "Statistic name")->required();
  exact->add_option("--n", query.n, "Size")->required();
  r_options.push_back(exact->add_option("--r", r_value, "Register, degree or fringe index"));
  exact->callback([&] {
    finish_query();
    action = [&] { return std::pair{exact_command(statistic, query), true}; };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force value by exhaustive enumeration");
  oracle->add_option("statistic", statistic, "Statistic name")->required();
  oracle->add_option("--n", query.n, "Size")->required();
  r_options.push_back(oracle->add_option("--r", r_value, "Register, degree or fringe index"));
  oracle->add_option("--jobs", query.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bound_options.push_back(oracle->add_option("--unsafe-bound", bound_value, "Raise the enumeration size limit"));
  oracle->callback([&] {
    finish_query();
    action = [&] { return std::pair{oracle_command(statistic, query), true}; };
  });

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Formula-versus-enumeration sweep; exit 1 on any mismatch");
  verify->add_option("statistic", verify_options.statistic, "Statistic name or 'all'")->required();
  verify->add_option("--nmax", verify_options.nmax, "Largest size")->required();
  verify->add_option("--mutate", verify_options.mutate, "Flip one bit of a formula constant, name[:bit]");
  verify->add_option("--jobs", verify_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* verify_bound = verify->add_option("--unsafe-bound", bound_value, "Raise the enumeration size limit");
  verify->callback([&] {
    if (verify_bound->count()) verify_options.unsafe_bound = bound_value;
    action = [&] { return verify_command(verify_options); };
  });

  unsigned terms = kDefaultFourierTerms;
  auto* asym = app.add_subcommand("asym", "Evaluate an asymptotic expansion with its residual");
  asym->add_option("expansion", statistic, "Expansion name")->required();
  asym->add_option("--n", query.n, "Size")->required();
  r_options.push_back(asym->add_option("--r", r_value, "Register or fringe index"));
  asym->add_option("--terms", terms, "Fourier terms K");
  asym->callback([&] {
    finish_query();
    action = [&] { return std::pair{asym_command(statistic, query, terms), true}; };
  });

  FluctuationOptions fluct;
  auto* fluctuation = app.add_subcommand("fluctuation", "Empirical periodic fluctuation with its Fourier series");
  fluctuation->add_option("which", fluct.which, "branches, total-fringe, cdeg-mean or cdeg-var")->required();
  fluctuation->add_option("--nmin", fluct.nmin, "Smallest size")->required();
  fluctuation->add_option("--nmax", fluct.nmax, "Largest size")->required();
  fluctuation->add_option("--terms", fluct.terms, "Fourier terms K");
  fluctuation->add_option("--per-octave", fluct.per_octave, "Grid points per doubling of n");
  fluctuation->add_option("--out", out_file, "Write the data to this file instead of standard output");
  fluctuation->callback([&] { action = [&] { return std::pair{fluctuation_command(fluct), true}; }; });

  McOptions mc_options;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate, or 'normality' for the fringe KS test");
  mc->add_option("statistic", mc_options.statistic,
                 "r-branches:R, total-branches, cdeg, fringe:R, total-fringe or normality")
      ->required();
  mc->add_option("--n", mc_options.n, "Size")->required();
  mc->add_option("--samples", mc_options.samples, "Number of samples")->required();
  mc->add_option("--seed", mc_options.seed, "Seed")->required();
  auto* mc_r = mc->add_option("--r", r_value, "Fringe index for normality");
  mc->add_option("--jobs", mc_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  mc->callback([&] {
    if (mc_r->count()) mc_options.r = r_value;
    action = [&] { return mc_command(mc_options); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto [table, passed] = action();
    if (!out_file.empty()) {
      std::ofstream file(out_file);
      if (!file) throw std::runtime_error("cannot open " + out_file);
      write_table(table, format, file);
      if (!file) throw std::runtime_error("write to " + out_file + " failed");
    } else {
      write_table(table, format, std::cout);
    }
    if (!passed) {
      std::cerr << "verification failed\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kComputation;
  }
}
