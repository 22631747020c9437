#include "regred/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "regred/exact.hpp"

namespace regred {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kEulerMaclaurinTerms = 15;

bool is_pole(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

}  // namespace

const std::vector<double>& even_bernoulli_numbers() {
  static const std::vector<double> numbers = [] {
    // Akiyama–Tanigawa in exact rationals; gives B_1 = +1/2, irrelevant for even indices.
    constexpr int kMax = 2 * kEulerMaclaurinTerms + 2;
    std::vector<Rational> a(kMax + 1);
    std::vector<Rational> b(kMax + 1);
    for (int m = 0; m <= kMax; ++m) {
      a[m] = make_rational(1, m + 1);
      for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
      b[m] = a[0];
    }
    std::vector<double> even;
    for (int k = 2; k <= kMax; k += 2) even.push_back(b[k].get_d());
    return even;
  }();
  return numbers;
}

Complex log_gamma_lanczos(Complex s) {
  const Complex z = s - 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(πs) without overflow for large |Im s|: sin(πs) = (i/2) e^{-iπs} (1 - e^{2πis}) when Im s >= 0.
Complex log_sin_pi(Complex s) {
  if (s.imag() < 0.0) return std::conj(log_sin_pi(std::conj(s)));
  return Complex(-std::log(2.0), kPi / 2.0) - Complex(0.0, kPi) * s + std::log(1.0 - std::exp(Complex(0.0, 2.0 * kPi) * s));
}

Complex complex_gamma(Complex s) {
  if (is_pole(s)) throw std::domain_error("complex_gamma: pole at a nonpositive integer");
  if (s.real() < 0.5) {
    // Reflection in log form; sin(πs) alone overflows once |Im s| passes about 225.
    return std::exp(std::log(kPi) - log_sin_pi(s) - log_gamma_lanczos(1.0 - s));
  }
  return std::exp(log_gamma_lanczos(s));
}

Complex zeta_euler_maclaurin(Complex s) {
  if (s == Complex(1.0, 0.0)) throw std::domain_error("complex_zeta: pole at s = 1");
  const auto& bernoulli = even_bernoulli_numbers();
  const int cutoff = 15 + static_cast<int>(std::ceil(std::abs(s)));
  const double big_n = cutoff;

  Complex sum = 0.0;
  for (int n = 1; n < cutoff; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));

  const double log_n = std::log(big_n);
  const Complex n_pow = std::exp(-s * log_n);  // N^{-s}
  sum += n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

  // Tail terms B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}.
  Complex rising = s;       // s(s+1)...(s+2j-2)
  Complex power = n_pow / big_n;  // N^{-s-2j+1}
  double factorial = 2.0;   // (2j)!
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    sum += bernoulli[j - 1] / factorial * rising * power;
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power /= big_n * big_n;
    factorial *= static_cast<double>(2 * j + 1) * static_cast<double>(2 * j + 2);
  }
  return sum;
}

Complex zeta_reflected(Complex s) {
  const Complex one_minus = 1.0 - s;
  if (is_pole(one_minus) || s == Complex(1.0, 0.0)) {
    // s = 1, 2, 3, ...: Γ(1-s) has a pole; the functional equation is a limit there.
    throw std::domain_error("zeta_reflected: functional equation singular at a positive integer");
  }
  return std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) * std::sin(kPi * s / 2.0) *
         complex_gamma(one_minus) * zeta_euler_maclaurin(one_minus);
}

Complex complex_zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) throw std::domain_error("complex_zeta: pole at s = 1");
  if (s.real() >= 0.5) return zeta_euler_maclaurin(s);
  if (is_pole(s)) {
    // Nonpositive integers: the reflected form hits 0 * pole. ζ(-m) = -B_{m+1} / (m + 1).
    const auto m = static_cast<std::size_t>(-s.real());
    const auto& bernoulli = even_bernoulli_numbers();
    if (m == 0) return -0.5;
    if (m % 2 == 0) return 0.0;
    if ((m + 1) / 2 <= bernoulli.size()) return -bernoulli[(m + 1) / 2 - 1] / static_cast<double>(m + 1);
    return zeta_euler_maclaurin(s);
  }
  return zeta_reflected(s);
}

Complex zeta_alternating(Complex s, unsigned terms) {
  const Complex denominator = 1.0 - std::pow(Complex(2.0), 1.0 - s);
  if (std::abs(denominator) < 1e-14) throw std::domain_error("zeta_alternating: 1 - 2^(1-s) vanishes");
  if (terms == 0) {
    // The error bound carries e^{π|t|} against (3 + √8)^{-n}.
    const double t = std::abs(s.imag());
    terms = 40 + static_cast<unsigned>(std::ceil((kPi * t + std::log1p(2.0 * t) + 36.0) / std::log(3.0 + std::sqrt(8.0))));
  }
  const double n = terms;
  // Partial sums d_k of the Chebyshev coefficients, rescaled whenever they grow large.
  std::vector<double> d(terms + 1);
  double term = 1.0;
  d[0] = 1.0;
  for (unsigned i = 1; i <= terms; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
    d[i] = d[i - 1] + term;
    if (d[i] > 1e250) {
      for (unsigned j = 0; j <= i; ++j) d[j] *= 1e-250;
      term *= 1e-250;
    }
  }
  Complex sum = 0.0;
  for (unsigned k = 0; k < terms; ++k) {
    const double weight = (d[k] - d[terms]) / d[terms];
    const Complex t = weight * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? t : -t;
  }
  return -sum / denominator;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double richardson_derivative(const std::function<double(double)>& f, double x, int order, double h) {
  if (order != 1 && order != 2) throw std::invalid_argument("richardson_derivative: order must be 1 or 2");
  constexpr int kLevels = 8;
  auto difference = [&](double step) {
    if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  // Ridders: halve the step, extrapolate the h^2 error series, keep the most
  // consistent entry of the tableau.
  std::array<std::array<double, kLevels>, kLevels> table{};
  double best = 0.0;
  double best_error = INFINITY;
  double step = h;
  for (int i = 0; i < kLevels; ++i, step /= 2.0) {
    table[i][0] = difference(step);
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      table[i][j] = (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      const double error = std::max(std::abs(table[i][j] - table[i][j - 1]), std::abs(table[i][j] - table[i - 1][j - 1]));
      if (error < best_error) {
        best_error = error;
        best = table[i][j];
      }
    }
    if (i > 0 && std::abs(table[i][i] - table[i - 1][i - 1]) > 2.0 * best_error) break;
  }
  return best;
}

const SpecialFunctionContext& SpecialFunctionContext::get() {
  static const SpecialFunctionContext context = [] {
    SpecialFunctionContext c{};
    c.euler_gamma = std::numbers::egamma;
    c.log2 = std::numbers::ln2;
    c.pi = kPi;
    auto zeta_real = [](double x) { return zeta_euler_maclaurin(Complex(x, 0.0)).real(); };
    c.zeta_prime_minus_one = richardson_derivative(zeta_real, -1.0, 1);
    c.zeta_second_zero = richardson_derivative(zeta_real, 0.0, 2);
    c.glaisher = std::exp(1.0 / 12.0 - c.zeta_prime_minus_one);
    return c;
  }();
  return context;
}

}  // namespace regred
