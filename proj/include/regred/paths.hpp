#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regred {

class Rng;

/// Unit lattice step. The enumerator order matches the text order U < R < D < L,
/// and each enumerator is its clockwise predecessor's successor.
enum class Step : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

constexpr Step rotate_clockwise(Step s) { return static_cast<Step>((static_cast<unsigned>(s) + 1) % 4); }
constexpr Step rotate_counterclockwise(Step s) { return static_cast<Step>((static_cast<unsigned>(s) + 3) % 4); }
constexpr bool is_horizontal(Step s) { return s == Step::Right || s == Step::Left; }
constexpr bool is_vertical(Step s) { return !is_horizontal(s); }

char step_char(Step s);

/// Word over {U, R, D, L}. Text form: the step characters, e.g. `UURD`.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Nonempty string over `URDL`; throws ParseError otherwise.
  static LatticePath parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  std::span<const Step> steps() const noexcept { return steps_; }

  /// Every step rotated by 90 degrees clockwise.
  LatticePath rotated_clockwise() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// A path that starts with a horizontal step and ends with a vertical one,
/// together with the rotations that produced it.
struct NormalizedPath {
  LatticePath path;
  bool rotated_whole = false;
  bool rotated_last = false;
};

/// Rotates the whole path clockwise if it starts vertically, then rotates the
/// last step clockwise if it is horizontal. Requires length >= 2.
NormalizedPath normalize(const LatticePath& path);

/// One application of the path reduction. Requires length >= 2.
///
/// The normalized path factors uniquely into pairs (H_i V_i) of maximal
/// horizontal and vertical runs. Each pair becomes one diagonal step chosen by
/// the first step of each run, and the diagonal word is turned 45 degrees
/// clockwise: (R,U) -> R, (R,D) -> D, (L,D) -> L, (L,U) -> U.
LatticePath reduce_path(const LatticePath& path);

/// Number of reductions needed to reach a single step. Requires length >= 1.
unsigned cdeg(const LatticePath& path);

/// Lengths of the fringes Φ^0(p), Φ^1(p), ..., Φ^cdeg(p)(p).
std::vector<std::size_t> fringe_sizes(const LatticePath& path);

/// Length of the r-th fringe, or 0 when the path cannot be reduced r times.
std::size_t fringe_size(const LatticePath& path, unsigned r);

std::size_t total_fringe_size(const LatticePath& path);

inline constexpr unsigned kDefaultPathBound = 12;

/// Streams all 4^n paths of length n in lexicographic U < R < D < L order.
class PathEnumerator {
 public:
  explicit PathEnumerator(unsigned n, unsigned bound = kDefaultPathBound);
  /// Only paths whose first steps equal `prefix`.
  PathEnumerator(unsigned n, std::span<const Step> prefix, unsigned bound = kDefaultPathBound);

  std::optional<LatticePath> next();

 private:
  std::vector<Step> current_;
  std::size_t fixed_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_path(unsigned n, const std::function<void(const LatticePath&)>& visit,
                   unsigned bound = kDefaultPathBound);

/// Path of n i.i.d. uniform steps. Requires n >= 1.
LatticePath random_path(unsigned n, std::uint64_t seed);
LatticePath random_path(unsigned n, Rng& rng);

}  // namespace regred
