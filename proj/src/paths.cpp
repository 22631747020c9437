#include "regred/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "regred/error.hpp"
#include "regred/rng.hpp"

namespace regred {

namespace {

void require_length(const LatticePath& path, std::size_t minimum, const char* what) {
  if (path.size() < minimum) {
    throw std::invalid_argument(std::string(what) + ": path needs at least " + std::to_string(minimum) +
                                " step" + (minimum == 1 ? "" : "s"));
  }
}

Step diagonal_to_axis(Step first_horizontal, Step first_vertical) {
  if (first_horizontal == Step::Right) return first_vertical == Step::Up ? Step::Right : Step::Down;
  return first_vertical == Step::Down ? Step::Left : Step::Up;
}

}  // namespace

char step_char(Step s) {
  static constexpr char kChars[] = {'U', 'R', 'D', 'L'};
  return kChars[static_cast<unsigned>(s)];
}

LatticePath LatticePath::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty path", 0);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'R': steps.push_back(Step::Right); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'L': steps.push_back(Step::Left); break;
      default: throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
  }
  return LatticePath(std::move(steps));
}

std::string LatticePath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(step_char(s));
  return out;
}

LatticePath LatticePath::rotated_clockwise() const {
  std::vector<Step> steps(steps_);
  for (Step& s : steps) s = rotate_clockwise(s);
  return LatticePath(std::move(steps));
}

NormalizedPath normalize(const LatticePath& path) {
  require_length(path, 2, "normalize");
  NormalizedPath result;
  std::vector<Step> steps(path.steps().begin(), path.steps().end());
  if (is_vertical(steps.front())) {
    for (Step& s : steps) s = rotate_clockwise(s);
    result.rotated_whole = true;
  }
  if (is_horizontal(steps.back())) {
    steps.back() = rotate_clockwise(steps.back());
    result.rotated_last = true;
  }
  result.path = LatticePath(std::move(steps));
  return result;
}

LatticePath reduce_path(const LatticePath& path) {
  const auto normalized = normalize(path).path;
  const auto steps = normalized.steps();
  std::vector<Step> reduced;
  reduced.reserve(steps.size() / 2);
  std::size_t i = 0;
  while (i < steps.size()) {
    const Step first_horizontal = steps[i];
    while (i < steps.size() && is_horizontal(steps[i])) ++i;
    // Normalization guarantees a vertical run follows every horizontal one.
    const Step first_vertical = steps[i];
    while (i < steps.size() && is_vertical(steps[i])) ++i;
    reduced.push_back(diagonal_to_axis(first_horizontal, first_vertical));
  }
  return LatticePath(std::move(reduced));
}

std::vector<std::size_t> fringe_sizes(const LatticePath& path) {
  require_length(path, 1, "fringe_sizes");
  std::vector<std::size_t> sizes{path.size()};
  LatticePath current = path;
  while (current.size() > 1) {
    current = reduce_path(current);
    sizes.push_back(current.size());
  }
  return sizes;
}

unsigned cdeg(const LatticePath& path) {
  return static_cast<unsigned>(fringe_sizes(path).size() - 1);
}

std::size_t fringe_size(const LatticePath& path, unsigned r) {
  const auto sizes = fringe_sizes(path);
  return r < sizes.size() ? sizes[r] : 0;
}

std::size_t total_fringe_size(const LatticePath& path) {
  std::size_t total = 0;
  for (auto s : fringe_sizes(path)) total += s;
  return total;
}

PathEnumerator::PathEnumerator(unsigned n, unsigned bound) : PathEnumerator(n, {}, bound) {}

PathEnumerator::PathEnumerator(unsigned n, std::span<const Step> prefix, unsigned bound)
    : current_(n, Step::Up), fixed_(prefix.size()) {
  if (n > bound) {
    throw std::out_of_range("path enumeration length " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  }
  if (prefix.size() > n) throw std::invalid_argument("path enumeration prefix longer than the paths");
  std::copy(prefix.begin(), prefix.end(), current_.begin());
}

std::optional<LatticePath> PathEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Base-4 increment of the free suffix, last step least significant.
    std::size_t i = current_.size();
    for (;;) {
      if (i == fixed_) {
        done_ = true;
        return std::nullopt;
      }
      --i;
      if (current_[i] != Step::Left) {
        current_[i] = static_cast<Step>(static_cast<unsigned>(current_[i]) + 1);
        break;
      }
      current_[i] = Step::Up;
    }
  }
  started_ = true;
  return LatticePath(current_);
}

void for_each_path(unsigned n, const std::function<void(const LatticePath&)>& visit, unsigned bound) {
  PathEnumerator paths(n, bound);
  while (auto p = paths.next()) visit(*p);
}

LatticePath random_path(unsigned n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_path: length must be at least 1");
  std::vector<Step> steps(n);
  for (Step& s : steps) s = static_cast<Step>(rng.below(4));
  return LatticePath(std::move(steps));
}

LatticePath random_path(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  return random_path(n, rng);
}

}  // namespace regred
