#include "regred/oracle.hpp"

#include <stdexcept>
#include <string>

#include "regred/parallel.hpp"

namespace regred {

namespace {

template <class T>
void add_at(std::vector<T>& v, std::size_t i, T value) {
  if (v.size() <= i) v.resize(i + 1, 0);
  v[i] += value;
}

template <class T>
void add_all(std::vector<T>& into, const std::vector<T>& from) {
  for (std::size_t i = 0; i < from.size(); ++i) add_at(into, i, from[i]);
}

template <class T>
T at_or_zero(const std::vector<T>& v, std::size_t i) {
  return i < v.size() ? v[i] : T{0};
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::logic_error("empty census");
  return make_rational(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
}

Rational variance(std::uint64_t sum, std::uint64_t square_sum, std::uint64_t count) {
  const Rational mean = ratio(sum, count);
  return ratio(square_sum, count) - mean * mean;
}

}  // namespace

void TreeCensus::add(const BinaryTree& tree) {
  const auto profile = branch_profile(tree);
  ++trees;
  add_at<std::uint64_t>(register_counts, profile.counts.size() - 1, 1);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < profile.counts.size(); ++r) {
    const std::uint64_t c = profile.counts[r];
    add_at(branch_sum, r, c);
    add_at(branch_square_sum, r, c * c);
    total += c;
  }
  total_branch_sum += total;
  total_branch_square_sum += total * total;
}

void TreeCensus::merge(const TreeCensus& other) {
  trees += other.trees;
  add_all(register_counts, other.register_counts);
  add_all(branch_sum, other.branch_sum);
  add_all(branch_square_sum, other.branch_square_sum);
  total_branch_sum += other.total_branch_sum;
  total_branch_square_sum += other.total_branch_square_sum;
}

Rational TreeCensus::mean_r_branches(unsigned r) const { return ratio(at_or_zero(branch_sum, r), trees); }

Rational TreeCensus::var_r_branches(unsigned r) const {
  return variance(at_or_zero(branch_sum, r), at_or_zero(branch_square_sum, r), trees);
}

Rational TreeCensus::mean_total_branches() const { return ratio(total_branch_sum, trees); }

Rational TreeCensus::var_total_branches() const {
  return variance(total_branch_sum, total_branch_square_sum, trees);
}

std::uint64_t TreeCensus::count_with_register(unsigned r) const { return at_or_zero(register_counts, r); }

void PathCensus::add(const LatticePath& path) {
  const auto sizes = fringe_sizes(path);
  ++paths;
  add_at<std::uint64_t>(cdeg_counts, sizes.size() - 1, 1);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const std::uint64_t s = sizes[r];
    add_at(fringe_sum, r, s);
    add_at(fringe_square_sum, r, s * s);
    total += s;
  }
  total_fringe_sum += total;
  total_fringe_square_sum += total * total;
}

void PathCensus::merge(const PathCensus& other) {
  paths += other.paths;
  add_all(cdeg_counts, other.cdeg_counts);
  add_all(fringe_sum, other.fringe_sum);
  add_all(fringe_square_sum, other.fringe_square_sum);
  total_fringe_sum += other.total_fringe_sum;
  total_fringe_square_sum += other.total_fringe_square_sum;
}

std::uint64_t PathCensus::count_with_cdeg(unsigned r) const { return at_or_zero(cdeg_counts, r); }

Rational PathCensus::mean_cdeg() const {
  std::uint64_t sum = 0;
  for (std::size_t r = 0; r < cdeg_counts.size(); ++r) sum += r * cdeg_counts[r];
  return ratio(sum, paths);
}

Rational PathCensus::var_cdeg() const {
  std::uint64_t sum = 0;
  std::uint64_t square = 0;
  for (std::size_t r = 0; r < cdeg_counts.size(); ++r) {
    sum += r * cdeg_counts[r];
    square += r * r * cdeg_counts[r];
  }
  return variance(sum, square, paths);
}

Rational PathCensus::mean_fringe(unsigned r) const { return ratio(at_or_zero(fringe_sum, r), paths); }

Rational PathCensus::var_fringe(unsigned r) const {
  return variance(at_or_zero(fringe_sum, r), at_or_zero(fringe_square_sum, r), paths);
}

Rational PathCensus::mean_total_fringe() const { return ratio(total_fringe_sum, paths); }

TreeCensus tree_census(unsigned n, unsigned jobs, unsigned bound) {
  if (n > bound) {
    throw std::out_of_range("tree census size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  TreeCensus census;
  census.n = n;
  if (n == 0) {
    census.add(BinaryTree::leaf());
    return census;
  }
  // Chunk k holds the trees whose left subtree has k internal nodes.
  const auto parts = run_chunks<TreeCensus>(n, jobs, [n](std::size_t k) {
    TreeCensus part;
    part.n = n;
    std::vector<BinaryTree> rights;
    for_each_tree(n - 1 - static_cast<unsigned>(k), [&](const BinaryTree& t) { rights.push_back(t); });
    for_each_tree(static_cast<unsigned>(k), [&](const BinaryTree& left) {
      for (const auto& right : rights) part.add(BinaryTree::join(left, right));
    });
    return part;
  });
  for (const auto& part : parts) census.merge(part);
  return census;
}

PathCensus path_census(unsigned n, unsigned jobs, unsigned bound) {
  if (n == 0) throw std::invalid_argument("path census needs length at least 1");
  if (n > bound) {
    throw std::out_of_range("path census length " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  const unsigned prefix_length = n >= 2 ? 2 : 1;
  const std::size_t chunks = prefix_length == 2 ? 16 : 4;
  const auto parts = run_chunks<PathCensus>(chunks, jobs, [n, prefix_length](std::size_t chunk) {
    PathCensus part;
    part.n = n;
    std::vector<Step> prefix;
    if (prefix_length == 2) prefix.push_back(static_cast<Step>(chunk / 4));
    prefix.push_back(static_cast<Step>(chunk % 4));
    PathEnumerator paths(n, prefix, n);
    while (auto p = paths.next()) part.add(*p);
    return part;
  });
  PathCensus census;
  census.n = n;
  for (const auto& part : parts) census.merge(part);
  return census;
}

}  // namespace regred
