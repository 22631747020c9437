#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regred {

/// Statistic measured on one uniformly random tree or path.
struct Statistic {
  enum class Kind { RBranches, TotalBranches, Cdeg, Fringe, TotalFringe };
  Kind kind = Kind::TotalBranches;
  unsigned r = 0;

  /// Accepts "r-branches:R", "total-branches", "cdeg", "fringe:R", "total-fringe".
  static Statistic parse(std::string_view text);
  std::string name() const;
  /// True for statistics over trees, false for statistics over paths.
  bool on_trees() const { return kind == Kind::RBranches || kind == Kind::TotalBranches; }
};

struct SampleSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 when count < 2
  std::vector<double> sorted_values;
  std::string generator;
  std::uint64_t seed = 0;
};

/// Samples are drawn in blocks of this many; block b uses substream b of the seed.
inline constexpr std::uint64_t kSampleBlock = 1024;

/// Draws `samples` i.i.d. uniform objects of size n and records the statistic.
/// The result depends only on (statistic, n, samples, seed), not on `jobs`.
SampleSummary sample_statistic(const Statistic& statistic, unsigned n, std::uint64_t samples, std::uint64_t seed,
                               unsigned jobs = 1);

/// (x - mean) / sd for every value, keeping order; sd must be positive.
std::vector<double> standardize(std::span<const double> values, double mean, double sd);

/// sup |F_n - Φ| for sorted values.
double ks_distance_normal(std::span<const double> sorted);

/// KS distance for integer-valued sorted samples against the normal law with
/// the given mean and variance, using the continuity-corrected distribution
/// function Φ((k + 1/2 - mean) / sd) at every integer k.
double lattice_ks_distance(std::span<const double> sorted, double mean, double variance);

/// Pass rule for the normality test: distance <= c / √samples + c' / √n.
struct KsThresholds {
  double c = 1.628;  // 99% quantile of the Kolmogorov distribution
  double c_prime = 0.25;
};
inline constexpr KsThresholds kKsThresholds{};

struct NormalityResult {
  double ks_statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double mean = 0.0;      // reference mean used for standardization
  double variance = 0.0;  // reference variance
  SampleSummary summary;
};

/// Compares the r-th fringe size of random paths of length n, r >= 1, with
/// the normal law whose moments are the mean and variance expansions.
NormalityResult normality_test(unsigned r, unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned jobs = 1,
                               const KsThresholds& thresholds = kKsThresholds);

/// Pearson statistic of observed counts against equal expected counts.
double chi_square_uniform(std::span<const std::uint64_t> counts);
/// Pearson statistic of observed counts against expected probabilities.
double chi_square(std::span<const std::uint64_t> counts, std::span<const double> probabilities);
/// Upper quantile of the chi-square law (Wilson–Hilferty), e.g. p = 0.999.
double chi_square_quantile(double degrees_of_freedom, double p);
/// Inverse of the standard normal distribution function.
double normal_quantile(double p);

}  // namespace regred
