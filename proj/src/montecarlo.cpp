#include "regred/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "regred/asymptotics.hpp"
#include "regred/parallel.hpp"
#include "regred/paths.hpp"
#include "regred/rng.hpp"
#include "regred/special.hpp"
#include "regred/trees.hpp"

namespace regred {

namespace {

unsigned parse_register(std::string_view text, std::string_view whole) {
  unsigned r = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad register in statistic '" + std::string(whole) + "'");
  }
  return r;
}

double measure(const Statistic& s, unsigned n, Rng& rng) {
  switch (s.kind) {
    case Statistic::Kind::RBranches: return static_cast<double>(count_r_branches(random_tree(n, rng), s.r));
    case Statistic::Kind::TotalBranches: return static_cast<double>(total_branches(random_tree(n, rng)));
    case Statistic::Kind::Cdeg: return cdeg(random_path(n, rng));
    case Statistic::Kind::Fringe: return static_cast<double>(fringe_size(random_path(n, rng), s.r));
    case Statistic::Kind::TotalFringe: return static_cast<double>(total_fringe_size(random_path(n, rng)));
  }
  return 0.0;
}

}  // namespace

Statistic Statistic::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const bool has_r = colon != std::string_view::npos;
  if (head == "r-branches" && has_r) return {Kind::RBranches, parse_register(text.substr(colon + 1), text)};
  if (head == "fringe" && has_r) return {Kind::Fringe, parse_register(text.substr(colon + 1), text)};
  if (!has_r) {
    if (head == "total-branches") return {Kind::TotalBranches};
    if (head == "cdeg") return {Kind::Cdeg};
    if (head == "total-fringe") return {Kind::TotalFringe};
  }
  throw std::invalid_argument("unknown statistic '" + std::string(text) + "'");
}

std::string Statistic::name() const {
  switch (kind) {
    case Kind::RBranches: return "r-branches:" + std::to_string(r);
    case Kind::TotalBranches: return "total-branches";
    case Kind::Cdeg: return "cdeg";
    case Kind::Fringe: return "fringe:" + std::to_string(r);
    case Kind::TotalFringe: return "total-fringe";
  }
  return {};
}

SampleSummary sample_statistic(const Statistic& statistic, unsigned n, std::uint64_t samples, std::uint64_t seed,
                               unsigned jobs) {
  if (n == 0) throw std::invalid_argument("sample_statistic: n must be at least 1");
  if (samples == 0) throw std::invalid_argument("sample_statistic: samples must be at least 1");
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  auto chunks = run_chunks<std::vector<double>>(blocks, jobs, [&](std::size_t b) {
    Rng rng(Rng::substream_seed(seed, b));
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    std::vector<double> values(count);
    for (auto& v : values) v = measure(statistic, n, rng);
    return values;
  });

  SampleSummary summary;
  summary.count = samples;
  summary.generator = std::string(Rng::kGeneratorName);
  summary.seed = seed;
  summary.sorted_values.reserve(samples);
  for (const auto& c : chunks) summary.sorted_values.insert(summary.sorted_values.end(), c.begin(), c.end());

  // Welford in block order, before sorting, so the result is independent of jobs.
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t k = 0;
  for (double x : summary.sorted_values) {
    ++k;
    const double d = x - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (x - mean);
  }
  summary.mean = mean;
  summary.variance = samples > 1 ? std::max(0.0, m2 / static_cast<double>(samples - 1)) : 0.0;
  std::sort(summary.sorted_values.begin(), summary.sorted_values.end());
  return summary;
}

std::vector<double> standardize(std::span<const double> values, double mean, double sd) {
  if (!(sd > 0.0)) throw std::domain_error("cannot standardize with zero spread (constant sample or zero variance)");
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [&](double x) { return (x - mean) / sd; });
  return out;
}

double ks_distance_normal(std::span<const double> sorted) {
  if (sorted.empty()) throw std::invalid_argument("ks_distance_normal: empty sample");
  const double size = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / size - f, f - static_cast<double>(i) / size});
  }
  return d;
}

double lattice_ks_distance(std::span<const double> sorted, double mean, double variance) {
  if (sorted.empty()) throw std::invalid_argument("lattice_ks_distance: empty sample");
  if (!(variance > 0.0)) throw std::domain_error("lattice_ks_distance: variance must be positive");
  const double sd = std::sqrt(variance);
  const double size = static_cast<double>(sorted.size());
  auto model = [&](double k) { return normal_cdf((k + 0.5 - mean) / sd); };
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double value = sorted[i];
    // Just below this value the empirical CDF still equals i / size.
    d = std::max(d, std::abs(static_cast<double>(i) / size - model(value - 1.0)));
    while (i < sorted.size() && sorted[i] == value) ++i;
    d = std::max(d, std::abs(static_cast<double>(i) / size - model(value)));
  }
  return d;
}

NormalityResult normality_test(unsigned r, unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned jobs,
                               const KsThresholds& thresholds) {
  if (r == 0) throw std::invalid_argument("normality_test: r must be at least 1 (the 0-th fringe is constant)");
  NormalityResult result;
  result.mean = to_double(expansion_fringe_mean(n, r));
  result.variance = to_double(expansion_fringe_var(n, r));
  result.summary = sample_statistic({Statistic::Kind::Fringe, r}, n, samples, seed, jobs);
  result.ks_statistic = lattice_ks_distance(result.summary.sorted_values, result.mean, result.variance);
  result.threshold = thresholds.c / std::sqrt(static_cast<double>(samples)) +
                     thresholds.c_prime / std::sqrt(static_cast<double>(n));
  result.pass = result.ks_statistic <= result.threshold;
  return result;
}

double chi_square(std::span<const std::uint64_t> counts, std::span<const double> probabilities) {
  if (counts.size() != probabilities.size()) throw std::invalid_argument("chi_square: size mismatch");
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probabilities[i];
    if (expected <= 0.0) throw std::invalid_argument("chi_square: expected count must be positive");
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double chi_square_uniform(std::span<const std::uint64_t> counts) {
  std::vector<double> p(counts.size(), 1.0 / static_cast<double>(counts.size()));
  return chi_square(counts, p);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  // Bisection on the distribution function; plenty for test thresholds.
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double chi_square_quantile(double degrees_of_freedom, double p) {
  if (!(degrees_of_freedom > 0.0)) throw std::domain_error("chi_square_quantile: degrees of freedom must be positive");
  const double z = normal_quantile(p);
  const double a = 2.0 / (9.0 * degrees_of_freedom);
  const double t = 1.0 - a + z * std::sqrt(a);
  return degrees_of_freedom * t * t * t;
}

}  // namespace regred
