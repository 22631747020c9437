// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "regred/asymptotics.hpp"
#include "regred/exact.hpp"
#include "regred/formulas.hpp"
#include "regred/generating_functions.hpp"
#include "regred/montecarlo.hpp"
#include "regred/oracle.hpp"
#include "regred/special.hpp"
#include "regred/verify.hpp"

using namespace regred;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

Outcome sweep(const std::string& statistic, unsigned nmax) {
  const VerifyReport report = verify_statistic(statistic, nmax);
  std::size_t bad = 0;
  for (const auto& row : report.rows) bad += row.match ? 0 : 1;
  return {report.ok() && !report.rows.empty(), statistic + " n<=" + std::to_string(nmax) + ": " +
                                                   std::to_string(report.rows.size() - bad) + "/" +
                                                   std::to_string(report.rows.size()) + " rows match"};
}

Outcome combine(std::vector<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.pass = out.pass && p.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
  }
  return out;
}

int run_cli(const std::string& args) {
  const std::string command = "\"" REGRED_CLI_PATH "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Scaled residuals at successive n must not grow: each at most twice the first.
bool no_growth(const std::vector<double>& scaled) {
  for (double v : scaled) {
    if (!std::isfinite(v) || v > 2.0 * scaled.front()) return false;
  }
  return true;
}

Outcome criterion7() {
  const std::vector<unsigned long> grid = {200, 400, 800, 1600};
  bool pass = true;
  std::string detail;
  for (unsigned r = 1; r <= 3; ++r) {
    std::vector<double> mean_scaled, var_scaled;
    for (unsigned long n : grid) {
      const Rational nn{Integer(n)};
      mean_scaled.push_back(
          std::abs(to_double((expected_r_branches(n, r) - expansion_r_branches_mean(n, r)) * nn * nn * nn)));
      var_scaled.push_back(
          std::abs(to_double((var_r_branches_exact(n, r) - expansion_r_branches_var(n, r)) * nn * nn)));
    }
    pass = pass && no_growth(mean_scaled) && no_growth(var_scaled);
    detail += "r=" + std::to_string(r) + " E*n^3 " + fmt(mean_scaled.front()) + ".." + fmt(mean_scaled.back()) +
              " V*n^2 " + fmt(var_scaled.front()) + ".." + fmt(var_scaled.back()) + "; ";
  }
  // Series variance against brute force where enumeration is possible.
  for (unsigned n = 1; n <= 10; ++n) {
    const TreeCensus census = tree_census(n);
    for (unsigned r = 0; r <= 3; ++r) pass = pass && census.var_r_branches(r) == var_r_branches_exact(n, r);
  }
  for (unsigned long n = 1; n <= 1600; n += 53) {
    pass = pass && expansion_r_branches_mean(n, 0) == Rational(Integer(n + 1)) && expansion_r_branches_var(n, 0) == 0;
  }
  detail += "brute-force variance n<=10 and r=0 exactness checked";
  return {pass, detail};
}

Outcome criterion8() {
  const auto grid = geometric_grid(256, 4096, 8);
  const FluctuationSeries delta = branches_fluctuation(20);
  double worst = 0.0, lo = 1.0, hi = -1.0;
  for (unsigned long n : grid) {
    const double residual = to_double(expected_branches(n)) - branches_smooth(static_cast<double>(n));
    const double phase = log4(static_cast<double>(n)) - std::floor(log4(static_cast<double>(n)));
    worst = std::max(worst, std::abs(residual - delta(phase)));
    lo = std::min(lo, residual);
    hi = std::max(hi, residual);
  }
  for (int i = 0; i < 1000; ++i) {
    lo = std::min(lo, delta(i / 1000.0));
    hi = std::max(hi, delta(i / 1000.0));
  }
  return {worst <= 5e-3 && lo >= -0.09 && hi <= 0.06,
          std::to_string(grid.size()) + " points, max |residual - delta| " + fmt(worst) + ", delta in [" + fmt(lo) +
              ", " + fmt(hi) + "]"};
}

Outcome criterion9() {
  Outcome sweeps = combine({sweep("cdeg-counts", 10), sweep("cdeg-mean", 10), sweep("fringe-mean", 10),
                            sweep("total-fringe", 10)});
  bool sums = true;
  for (unsigned long n = 1; n <= 200; ++n) {
    Integer total = 0;
    for (unsigned r = 0; r <= 64; ++r) total += count_paths_cdeg(n, r);
    sums = sums && total == power(4, n);
  }
  sweeps.pass = sweeps.pass && sums;
  sweeps.detail += std::string("; row sums 4^n for n<=200 ") + (sums ? "hold" : "FAIL");
  return sweeps;
}

Outcome criterion10() {
  const auto grid = geometric_grid(64, 1024, 8);
  double periodic = 0.0, bound = 0.0, var_bound = 0.0;
  for (unsigned long n : grid) {
    const double a = to_double(expected_cdeg(n)) - asym_expected_cdeg_smooth(n).value;
    const double b = to_double(expected_cdeg(4 * n)) - asym_expected_cdeg_smooth(4 * n).value;
    periodic = std::max(periodic, std::abs(a - b));
    bound = std::max({bound, std::abs(a), std::abs(b)});
    var_bound = std::max(var_bound, std::abs(to_double(var_cdeg(n)) - asym_var_cdeg_smooth(n).value));
  }
  return {periodic < 1e-2 && bound <= 0.2 && var_bound <= 0.2,
          "max |res(n) - res(4n)| " + fmt(periodic) + ", max |res| " + fmt(bound) + ", max |var res| " +
              fmt(var_bound)};
}

Outcome criterion11() {
  const Rational e64 = abs(expected_fringe(64, 2) - expansion_fringe_mean(64, 2));
  const Rational e128 = abs(expected_fringe(128, 2) - expansion_fringe_mean(128, 2));
  const bool decay = e128 * 10 <= e64 && e64 > 0;
  bool pass = decay;
  std::string detail = "r=2 error " + fmt(to_double(e64)) + " -> " + fmt(to_double(e128));
  for (unsigned r = 1; r <= 2; ++r) {
    const NormalityResult result = normality_test(r, 400, 100000, 20240 + r, 1);
    pass = pass && result.ks_statistic <= 0.02;
    detail += "; KS r=" + std::to_string(r) + " " + fmt(result.ks_statistic);
  }
  return {pass, detail};
}

Outcome criterion12() {
  const auto grid = geometric_grid(128, 2048, 8);
  const FluctuationSeries delta = fringe_fluctuation(20);
  double worst = 0.0;
  for (unsigned long n : grid) {
    const double x = log4(static_cast<double>(n));
    const double residual = to_double(expected_total_fringe(n)) - total_fringe_smooth(static_cast<double>(n));
    worst = std::max(worst, std::abs(residual - delta(x - std::floor(x))));
  }
  return {worst <= 1e-2, std::to_string(grid.size()) + " points, max |residual - delta| " + fmt(worst)};
}

// log sin(πs), stable for large |Im s|: sin(πs) = (i/2) e^{-iπs} (1 - e^{2iπs}) for Im s >= 0.
Complex log_sin_pi(Complex s) {
  if (s.imag() < 0.0) return std::conj(log_sin_pi(std::conj(s)));
  const double pi = std::numbers::pi;
  return Complex(-std::log(2.0), pi / 2.0) - Complex(0.0, pi) * s + std::log(1.0 - std::exp(Complex(0.0, 2.0 * pi) * s));
}

// Distance between two logarithms, ignoring multiples of 2πi; approximates the relative error.
double log_distance(Complex a, Complex b) {
  Complex d = a - b;
  const double two_pi = 2.0 * std::numbers::pi;
  d.imag(d.imag() - two_pi * std::round(d.imag() / two_pi));
  return std::abs(d);
}

double relative(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Outcome criterion13() {
  double gamma_worst = 0.0, zeta_worst = 0.0;
  for (int k = -30; k <= 30; ++k) {
    if (k == 0) continue;
    const Complex x = chi(k);
    // Γ at χ_k and at the arguments the fluctuation coefficients use.
    for (Complex s : {x, x / 2.0, (3.0 + x) / 2.0, x - 1.0, x + 1.0}) {
      const Complex lhs = std::log(complex_gamma(s)) + std::log(complex_gamma(1.0 - s));
      const Complex rhs = std::log(std::numbers::pi) - log_sin_pi(s);
      gamma_worst = std::max(gamma_worst, log_distance(lhs, rhs));
      // The recurrence crosses between the reflected and the direct branch.
      gamma_worst = std::max(gamma_worst, log_distance(std::log(complex_gamma(s + 1.0)), std::log(s * complex_gamma(s))));
    }
    // |Γ(it)|² = π / (t sinh πt), in logarithms.
    const double t = std::abs(x.imag());
    const double log_sinh = std::numbers::pi * t - std::log(2.0) + std::log1p(-std::exp(-2.0 * std::numbers::pi * t));
    gamma_worst = std::max(gamma_worst, std::abs(2.0 * std::log(std::abs(complex_gamma(x))) -
                                                 (std::log(std::numbers::pi) - std::log(t) - log_sinh)));
    // ζ by Euler–Maclaurin against the alternating series and the functional equation.
    for (Complex s : {x, x - 1.0}) {
      const Complex em = zeta_euler_maclaurin(s);
      zeta_worst = std::max({zeta_worst, relative(zeta_alternating(s), em), relative(zeta_reflected(s), em)});
    }
    // At χ_k + 1 the alternating series is singular (2^{1-s} = 1).
    const Complex s = x + 1.0;
    zeta_worst = std::max(zeta_worst, relative(zeta_reflected(s), zeta_euler_maclaurin(s)));
  }
  return {gamma_worst <= 1e-10 && zeta_worst <= 1e-10,
          "gamma reflection " + fmt(gamma_worst) + ", zeta routes " + fmt(zeta_worst) + " over 0<|k|<=30"};
}

Outcome criterion14() {
  struct Sweep {
    const char* statistic;
    unsigned nmax;
  };
  const Sweep sweeps[] = {{"catalan", 12},     {"touchard", 60},        {"register-reduction", 10},
                          {"r-branches", 12},  {"branch-identity", 10}, {"total-branches", 12},
                          {"cdeg-counts", 10}, {"cdeg-mean", 10},       {"fringe-mean", 10},
                          {"total-fringe", 10}};
  bool pass = true;
  int clean = 0;
  for (const auto& s : sweeps) {
    const int status = run_cli(std::string("verify ") + s.statistic + " --nmax " + std::to_string(s.nmax));
    clean += status == 0 ? 1 : 0;
    pass = pass && status == 0;
  }
  struct Mutation {
    const char* constant;
    const char* statistic;
  };
  const Mutation mutations[] = {{"catalan_offset", "catalan"},       {"touchard_base", "touchard"},
                                {"branch_middle", "r-branches"},     {"branch_total_limit", "total-branches"},
                                {"path_base", "cdeg-counts"},        {"cdeg_mean_factor", "cdeg-mean"},
                                {"fringe_cubic", "fringe-mean"},     {"fringe_divisor", "fringe-mean"},
                                {"total_fringe_numerator", "total-fringe"}};
  int caught = 0, total = 0;
  for (const auto& m : mutations) {
    for (unsigned bit = 0; bit < 4; ++bit) {
      ++total;
      const int status = run_cli(std::string("verify ") + m.statistic + " --nmax 8 --mutate " + m.constant + ":" +
                                 std::to_string(bit));
      caught += status == 1 ? 1 : 0;
      pass = pass && status == 1;
    }
  }
  return {pass, std::to_string(clean) + "/10 clean sweeps exit 0, " + std::to_string(caught) + "/" +
                    std::to_string(total) + " mutations exit 1"};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      [] { return sweep("catalan", 12); },
      [] { return sweep("touchard", 60); },
      [] { return sweep("register-reduction", 10); },
      [] { return sweep("r-branches", 12); },
      [] { return sweep("branch-identity", 10); },
      [] { return sweep("total-branches", 12); },
      criterion7,
      criterion8,
      criterion9,
      criterion10,
      criterion11,
      criterion12,
      criterion13,
      criterion14,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i]();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.detail
              << ", " << fmt(seconds) << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
