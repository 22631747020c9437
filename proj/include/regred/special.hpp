#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace regred {

using Complex = std::complex<double>;

/// Gamma function: Lanczos approximation (g = 7, nine terms) for Re(s) >= 1/2,
/// reflection Γ(s)Γ(1-s) = π / sin(πs) otherwise. Throws std::domain_error at poles.
Complex complex_gamma(Complex s);

/// log Γ(s) from the Lanczos sum; Re(s) >= 1/2.
Complex log_gamma_lanczos(Complex s);

/// Riemann zeta: Euler–Maclaurin summation for Re(s) >= 1/2, functional
/// equation otherwise. Throws std::domain_error at s = 1.
Complex complex_zeta(Complex s);

/// Euler–Maclaurin summation at any s != 1, no reflection.
Complex zeta_euler_maclaurin(Complex s);

/// ζ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s) ζ(1-s), with ζ(1-s) by Euler–Maclaurin.
Complex zeta_reflected(Complex s);

/// ζ(s) = η(s) / (1 - 2^(1-s)) with the alternating series accelerated by
/// Borwein's Chebyshev weights. Undefined where 2^(1-s) = 1. With terms = 0
/// the number of terms grows with |Im s| so the truncation error stays near 1e-15.
Complex zeta_alternating(Complex s, unsigned terms = 0);

/// B_2, B_4, ..., B_{2count}, computed exactly and rounded.
const std::vector<double>& even_bernoulli_numbers();

/// Standard normal distribution function.
double normal_cdf(double x);

/// First or second derivative by central differences with Richardson extrapolation.
double richardson_derivative(const std::function<double(double)>& f, double x, int order, double h = 0.1);

/// Constants used by the asymptotic expansions, built once on first use.
struct SpecialFunctionContext {
  double euler_gamma;
  double log2;
  double pi;
  double zeta_prime_minus_one;  // ζ'(-1), numerically from the zeta evaluator
  double zeta_second_zero;      // ζ''(0), numerically from the zeta evaluator
  double glaisher;              // A = exp(1/12 - ζ'(-1))

  static const SpecialFunctionContext& get();
};

}  // namespace regred
