#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace regred {

/// Seedable pseudorandom source with identical streams on every platform.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so bounded
/// draws use their own rejection step instead of std::uniform_int_distribution.
class Rng {
 public:
  static constexpr std::string_view kGeneratorName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Seed of the index-th substream derived from a master seed (splitmix64 mixing).
  static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

}  // namespace regred
