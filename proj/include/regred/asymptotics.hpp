#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regred/exact.hpp"
#include "regred/special.hpp"

namespace regred {

/// Shape of the error term that an expansion leaves out.
struct ErrorOrder {
  enum class Kind {
    Exact,        // the expansion is the exact value
    PowerOfN,     // O(n^exponent)
    LogNOverN,    // O(log n / n)
    InverseLogN,  // O(1 / log n)
    Exponential,  // O(n^exponent theta^-n)
    Unspecified,
  };
  Kind kind = Kind::Unspecified;
  double exponent = 0.0;
  double theta = 0.0;

  std::string describe() const;
};

struct AsymptoticEstimate {
  double value = 0.0;
  ErrorOrder error;
};

inline constexpr unsigned kDefaultFourierTerms = 20;

/// χ_k = 2πik / log 2.
Complex chi(int k);

/// Real 1-periodic function given by Fourier coefficients c_k, 0 < |k| <= K.
class FluctuationSeries {
 public:
  /// `coefficient(k)` is called for every k in [-K, K] \ {0}.
  FluctuationSeries(unsigned terms, const std::function<Complex(int)>& coefficient);

  unsigned terms() const { return terms_; }
  Complex coefficient(int k) const;

  /// Σ c_k e^{2πikx}; imaginary part is rounding noise when c_{-k} = conj(c_k).
  Complex evaluate_complex(double x) const;
  double operator()(double x) const { return evaluate_complex(x).real(); }

  /// Mean over one period by the trapezoid rule on `samples` points (exact for samples > K).
  double period_mean(unsigned samples = 256) const;
  /// Largest |c_{-k} - conj(c_k)|.
  double conjugate_asymmetry() const;

 private:
  unsigned terms_;
  std::vector<Complex> positive_;  // c_1..c_K
  std::vector<Complex> negative_;  // c_{-1}..c_{-K}
};

// Expected r-branches and variance in uniform trees of size n.
AsymptoticEstimate asym_expected_r_branches(unsigned long n, unsigned r);
AsymptoticEstimate asym_var_r_branches(unsigned long n, unsigned r);
/// The same truncated expansions evaluated in exact arithmetic (they are rational in n).
Rational expansion_r_branches_mean(unsigned long n, unsigned r);
Rational expansion_r_branches_var(unsigned long n, unsigned r);

/// Fluctuation of the total branch count: coefficients Γ(χ_k/2) ζ(χ_k-1) (χ_k-1) / log 2.
FluctuationSeries branches_fluctuation(unsigned terms = kDefaultFourierTerms);
double delta_branches(double x, unsigned terms = kDefaultFourierTerms);
/// 4n/3 + log_4(n)/6 + constant, without the fluctuation.
double branches_smooth(double n);
double branches_constant();
AsymptoticEstimate asym_expected_branches(unsigned long n, unsigned terms = kDefaultFourierTerms);

/// Smooth parts of the compactification-degree mean and variance; the periodic
/// fluctuations have no closed form here and are measured empirically.
AsymptoticEstimate asym_expected_cdeg_smooth(unsigned long n);
AsymptoticEstimate asym_var_cdeg_smooth(unsigned long n);
double cdeg_mean_constant();
double cdeg_var_constant();

/// θ_r = 4 / (2 + 2 cos(2π / 2^r)); infinite for r = 1.
double fringe_theta(unsigned r);
/// Mean and variance of the r-th fringe size.
std::pair<AsymptoticEstimate, AsymptoticEstimate> asym_fringe(unsigned long n, unsigned r);
Rational expansion_fringe_mean(unsigned long n, unsigned r);
Rational expansion_fringe_var(unsigned long n, unsigned r);

/// Fluctuation of the total fringe size:
/// 2 / (3 √π log 2) Γ((3 + χ_k)/2) (2ζ(χ_k - 1) + ζ(χ_k + 1)).
FluctuationSeries fringe_fluctuation(unsigned terms = kDefaultFourierTerms);
double total_fringe_smooth(double n);
double total_fringe_constant();
AsymptoticEstimate asym_total_fringe(unsigned long n, unsigned terms = kDefaultFourierTerms);

struct FluctuationPoint {
  unsigned long n;
  double phase;     // log_4 n mod 1
  double residual;  // exact(n) - smooth(n)
};

std::vector<FluctuationPoint> empirical_fluctuation(const std::function<double(unsigned long)>& exact,
                                                    const std::function<double(unsigned long)>& smooth,
                                                    std::span<const unsigned long> ns);

/// Distinct integers round(nmin * 2^(i / per_octave)) within [nmin, nmax].
std::vector<unsigned long> geometric_grid(unsigned long nmin, unsigned long nmax, unsigned per_octave);

double log4(double x);

}  // namespace regred
