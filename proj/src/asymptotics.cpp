#include "regred/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace regred {

namespace {

const SpecialFunctionContext& constants() { return SpecialFunctionContext::get(); }

Rational pow_rational(long base, unsigned exponent) { return Rational(power(base, exponent)); }

void require_positive(unsigned long n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

}  // namespace

std::string ErrorOrder::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::PowerOfN: out << "O(n^" << exponent << ")"; break;
    case Kind::LogNOverN: return "O(log n / n)";
    case Kind::InverseLogN: return "O(1 / log n)";
    case Kind::Exponential: out << "O(n^" << exponent << " * " << theta << "^-n)"; break;
    case Kind::Unspecified: return "unspecified";
  }
  return out.str();
}

double log4(double x) { return std::log(x) / (2.0 * std::numbers::ln2); }

Complex chi(int k) { return Complex(0.0, 2.0 * std::numbers::pi * k / std::numbers::ln2); }

FluctuationSeries::FluctuationSeries(unsigned terms, const std::function<Complex(int)>& coefficient)
    : terms_(terms) {
  positive_.reserve(terms);
  negative_.reserve(terms);
  for (unsigned k = 1; k <= terms; ++k) {
    positive_.push_back(coefficient(static_cast<int>(k)));
    negative_.push_back(coefficient(-static_cast<int>(k)));
  }
}

Complex FluctuationSeries::coefficient(int k) const {
  if (k == 0 || static_cast<unsigned>(std::abs(k)) > terms_) return 0.0;
  return k > 0 ? positive_[k - 1] : negative_[-k - 1];
}

Complex FluctuationSeries::evaluate_complex(double x) const {
  Complex sum = 0.0;
  for (unsigned k = 1; k <= terms_; ++k) {
    const double angle = 2.0 * std::numbers::pi * k * x;
    const Complex e(std::cos(angle), std::sin(angle));
    sum += positive_[k - 1] * e + negative_[k - 1] * std::conj(e);
  }
  return sum;
}

double FluctuationSeries::period_mean(unsigned samples) const {
  double sum = 0.0;
  for (unsigned i = 0; i < samples; ++i) sum += (*this)(static_cast<double>(i) / samples);
  return sum / samples;
}

double FluctuationSeries::conjugate_asymmetry() const {
  double worst = 0.0;
  for (unsigned k = 0; k < terms_; ++k) worst = std::max(worst, std::abs(negative_[k] - std::conj(positive_[k])));
  return worst;
}

Rational expansion_r_branches_mean(unsigned long n, unsigned r) {
  require_positive(n, "expansion_r_branches_mean");
  const Rational four_r = pow_rational(4, r);
  const Rational sixteen_r = pow_rational(16, r);
  const Rational nn{Integer(n)};
  return nn / four_r + Rational(1, 6) * (1 + 5 / four_r) + (four_r - 1 / four_r) / (20 * nn) +
         (5 * sixteen_r / 21 - 7 * four_r / 10 + 97 / (210 * four_r)) / (12 * nn * nn);
}

Rational expansion_r_branches_var(unsigned long n, unsigned r) {
  require_positive(n, "expansion_r_branches_var");
  const Rational four_r = pow_rational(4, r);
  const Rational sixteen_r = pow_rational(16, r);
  const Rational sixty_four_r = pow_rational(64, r);
  const Rational nn{Integer(n)};
  return (four_r - 1) / (3 * sixteen_r) * nn - (2 * sixteen_r - 25 * four_r + 23) / (90 * sixteen_r) -
         (13 * sixty_four_r - 14 * sixteen_r + 7 * four_r - 6) / (420 * sixteen_r * nn);
}

AsymptoticEstimate asym_expected_r_branches(unsigned long n, unsigned r) {
  AsymptoticEstimate e;
  e.value = to_double(expansion_r_branches_mean(n, r));
  e.error = r == 0 ? ErrorOrder{ErrorOrder::Kind::Exact} : ErrorOrder{ErrorOrder::Kind::PowerOfN, -3.0};
  return e;
}

AsymptoticEstimate asym_var_r_branches(unsigned long n, unsigned r) {
  AsymptoticEstimate e;
  e.value = to_double(expansion_r_branches_var(n, r));
  e.error = r == 0 ? ErrorOrder{ErrorOrder::Kind::Exact} : ErrorOrder{ErrorOrder::Kind::PowerOfN, -2.0};
  return e;
}

FluctuationSeries branches_fluctuation(unsigned terms) {
  const double log2 = constants().log2;
  return FluctuationSeries(terms, [log2](int k) {
    const Complex x = chi(k);
    return complex_gamma(x / 2.0) * complex_zeta(x - 1.0) * (x - 1.0) / log2;
  });
}

double delta_branches(double x, unsigned terms) { return branches_fluctuation(terms)(x); }

double branches_constant() {
  const auto& c = constants();
  return -2.0 * c.zeta_prime_minus_one / c.log2 - c.euler_gamma / (12.0 * c.log2) - 1.0 / (6.0 * c.log2) +
         43.0 / 36.0;
}

double branches_smooth(double n) { return 4.0 * n / 3.0 + log4(n) / 6.0 + branches_constant(); }

AsymptoticEstimate asym_expected_branches(unsigned long n, unsigned terms) {
  require_positive(n, "asym_expected_branches");
  const double nn = static_cast<double>(n);
  return {branches_smooth(nn) + delta_branches(log4(nn), terms), {ErrorOrder::Kind::LogNOverN}};
}

double cdeg_mean_constant() {
  const auto& c = constants();
  return (c.euler_gamma + 2.0 - 3.0 * c.log2) / (2.0 * c.log2);
}

double cdeg_var_constant() {
  const auto& c = constants();
  const double log_pi = std::log(c.pi);
  return (c.pi * c.pi - 24.0 * log_pi * log_pi - 48.0 * c.zeta_second_zero - 24.0) / (24.0 * c.log2 * c.log2) -
         2.0 * log_pi / c.log2 - 11.0 / 12.0;
}

AsymptoticEstimate asym_expected_cdeg_smooth(unsigned long n) {
  require_positive(n, "asym_expected_cdeg_smooth");
  return {log4(static_cast<double>(n)) + cdeg_mean_constant(), {ErrorOrder::Kind::PowerOfN, -1.0}};
}

AsymptoticEstimate asym_var_cdeg_smooth(unsigned long n) {
  require_positive(n, "asym_var_cdeg_smooth");
  return {cdeg_var_constant(), {ErrorOrder::Kind::InverseLogN}};
}

double fringe_theta(unsigned r) {
  const double denominator = 2.0 + 2.0 * std::cos(2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(r)));
  if (r == 1 || std::abs(denominator) < 1e-15) return std::numeric_limits<double>::infinity();
  return 4.0 / denominator;
}

Rational expansion_fringe_mean(unsigned long n, unsigned r) {
  require_positive(n, "expansion_fringe_mean");
  const Rational four_r = pow_rational(4, r);
  return Rational(Integer(n)) / four_r + (1 - 1 / four_r) / 3;
}

Rational expansion_fringe_var(unsigned long n, unsigned r) {
  require_positive(n, "expansion_fringe_var");
  const Rational four_r = pow_rational(4, r);
  const Rational sixteen_r = pow_rational(16, r);
  return (four_r - 1) / (3 * sixteen_r) * Rational(Integer(n)) + (-2 * sixteen_r - 5 * four_r + 7) / (45 * sixteen_r);
}

std::pair<AsymptoticEstimate, AsymptoticEstimate> asym_fringe(unsigned long n, unsigned r) {
  ErrorOrder mean_error;
  ErrorOrder var_error;
  if (r == 0) {
    mean_error = var_error = {ErrorOrder::Kind::Exact};
  } else if (r == 1) {
    // θ_1 has a vanishing denominator; the stated error form does not apply.
    mean_error = var_error = {ErrorOrder::Kind::Unspecified};
  } else {
    mean_error = {ErrorOrder::Kind::Exponential, 3.0, fringe_theta(r)};
    var_error = {ErrorOrder::Kind::Exponential, 5.0, fringe_theta(r)};
  }
  return {{to_double(expansion_fringe_mean(n, r)), mean_error}, {to_double(expansion_fringe_var(n, r)), var_error}};
}

FluctuationSeries fringe_fluctuation(unsigned terms) {
  const auto& c = constants();
  const double prefactor = 2.0 / (3.0 * std::sqrt(c.pi) * c.log2);
  return FluctuationSeries(terms, [prefactor](int k) {
    const Complex x = chi(k);
    return prefactor * complex_gamma((3.0 + x) / 2.0) * (2.0 * complex_zeta(x - 1.0) + complex_zeta(x + 1.0));
  });
}

double total_fringe_constant() {
  const auto& c = constants();
  return (5.0 + 3.0 * c.euler_gamma - 11.0 * c.log2) / (18.0 * c.log2);
}

double total_fringe_smooth(double n) { return 4.0 * n / 3.0 + log4(n) / 3.0 + total_fringe_constant(); }

AsymptoticEstimate asym_total_fringe(unsigned long n, unsigned terms) {
  require_positive(n, "asym_total_fringe");
  const double nn = static_cast<double>(n);
  return {total_fringe_smooth(nn) + fringe_fluctuation(terms)(log4(nn)), {ErrorOrder::Kind::LogNOverN}};
}

std::vector<FluctuationPoint> empirical_fluctuation(const std::function<double(unsigned long)>& exact,
                                                    const std::function<double(unsigned long)>& smooth,
                                                    std::span<const unsigned long> ns) {
  std::vector<FluctuationPoint> points;
  points.reserve(ns.size());
  for (unsigned long n : ns) {
    const double x = log4(static_cast<double>(n));
    points.push_back({n, x - std::floor(x), exact(n) - smooth(n)});
  }
  return points;
}

std::vector<unsigned long> geometric_grid(unsigned long nmin, unsigned long nmax, unsigned per_octave) {
  if (nmin == 0 || nmin > nmax || per_octave == 0) throw std::invalid_argument("geometric_grid: bad range");
  std::vector<unsigned long> grid;
  for (unsigned i = 0;; ++i) {
    const double value = std::round(static_cast<double>(nmin) * std::exp2(static_cast<double>(i) / per_octave));
    if (value > static_cast<double>(nmax)) break;
    const auto n = static_cast<unsigned long>(value);
    if (grid.empty() || grid.back() != n) grid.push_back(n);
  }
  return grid;
}

}  // namespace regred
