#pragma once

#include <cstdint>
#include <vector>

#include "regred/exact.hpp"
#include "regred/paths.hpp"
#include "regred/trees.hpp"

namespace regred {

/// Brute-force statistics over all trees of one size. All sums are exact.
struct TreeCensus {
  unsigned n = 0;
  std::uint64_t trees = 0;
  std::vector<std::uint64_t> register_counts;    // indexed by register value
  std::vector<std::uint64_t> branch_sum;         // sum of count_r_branches, by r
  std::vector<std::uint64_t> branch_square_sum;  // sum of count_r_branches^2, by r
  std::uint64_t total_branch_sum = 0;
  std::uint64_t total_branch_square_sum = 0;

  void add(const BinaryTree& tree);
  void merge(const TreeCensus& other);

  Rational mean_r_branches(unsigned r) const;
  Rational var_r_branches(unsigned r) const;
  Rational mean_total_branches() const;
  Rational var_total_branches() const;
  std::uint64_t count_with_register(unsigned r) const;
};

/// Brute-force statistics over all 4^n paths of one length.
struct PathCensus {
  unsigned n = 0;
  std::uint64_t paths = 0;
  std::vector<std::uint64_t> cdeg_counts;        // indexed by compactification degree
  std::vector<std::uint64_t> fringe_sum;         // sum of fringe_size, by r
  std::vector<std::uint64_t> fringe_square_sum;  // sum of fringe_size^2, by r
  std::uint64_t total_fringe_sum = 0;
  std::uint64_t total_fringe_square_sum = 0;

  void add(const LatticePath& path);
  void merge(const PathCensus& other);

  std::uint64_t count_with_cdeg(unsigned r) const;
  Rational mean_cdeg() const;
  Rational var_cdeg() const;
  Rational mean_fringe(unsigned r) const;
  Rational var_fringe(unsigned r) const;
  Rational mean_total_fringe() const;
};

/// Enumerates every tree of size n; chunks by left-subtree size across `jobs` threads.
TreeCensus tree_census(unsigned n, unsigned jobs = 1, unsigned bound = kDefaultTreeBound);

/// Enumerates every path of length n >= 1; chunks by two-step prefix across `jobs` threads.
PathCensus path_census(unsigned n, unsigned jobs = 1, unsigned bound = kDefaultPathBound);

}  // namespace regred
