#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regred/error.hpp"

namespace regred {

/// Full binary tree: every node is a leaf or has exactly two children.
///
/// Nodes are stored in preorder. The left child of an internal node `i` is
/// `i + 1`; its right child index is kept explicitly. Index 0 is the root and
/// can never be a right child, so a stored right index of 0 marks a leaf.
///
/// Text form: `tree := "." | "(" tree tree ")"`, no whitespace.
class BinaryTree {
 public:
  using Index = std::uint32_t;

  /// The single leaf.
  BinaryTree() : right_(1, 0) {}

  static BinaryTree leaf() { return BinaryTree{}; }
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree parse(std::string_view text);

  /// Builds a tree from its preorder node kinds (true = internal node).
  /// The sequence must be a complete preorder word; throws std::invalid_argument otherwise.
  static BinaryTree from_preorder(const std::vector<bool>& internal);

  std::string encode() const;

  bool is_leaf() const noexcept { return right_.size() == 1; }
  /// Number of internal nodes.
  std::size_t size() const noexcept { return (right_.size() - 1) / 2; }
  std::size_t leaf_count() const noexcept { return size() + 1; }
  std::size_t node_count() const noexcept { return right_.size(); }

  bool is_internal(std::size_t node) const { return right_[node] != 0; }
  std::size_t left_child(std::size_t node) const { return node + 1; }
  std::size_t right_child(std::size_t node) const { return right_[node]; }

  /// Copy of the subtree rooted at `node`.
  BinaryTree subtree(std::size_t node) const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  explicit BinaryTree(std::vector<Index> right) : right_(std::move(right)) {}
  /// One past the last node of the subtree rooted at `node`.
  std::size_t subtree_end(std::size_t node) const;

  std::vector<Index> right_;
};

/// Register value of the subtree rooted at each node, aligned with preorder.
struct RegisterLabeling {
  std::vector<unsigned> labels;
  unsigned root() const { return labels.front(); }
};

/// Per-register counts of r-branches (maximal equal-label chains) and labeled nodes.
struct BranchProfile {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> node_counts;
};

RegisterLabeling label_registers(const BinaryTree& tree);

/// Horton–Strahler number: 0 for a leaf, max of the children if they differ,
/// one more than the common value if they agree.
unsigned register_function(const BinaryTree& tree);

/// One compactification step: erase all leaves, contract every node with a
/// single remaining child into that child, and turn childless nodes into leaves.
/// Throws std::invalid_argument on a leaf.
BinaryTree reduce_tree(const BinaryTree& tree);

/// Applies reduce_tree `times` times; throws if the tree becomes a leaf too early.
BinaryTree reduce_tree_times(const BinaryTree& tree, unsigned times);

BranchProfile branch_profile(const BinaryTree& tree);
std::uint64_t count_r_branches(const BinaryTree& tree, unsigned r);
std::uint64_t total_branches(const BinaryTree& tree);

inline constexpr unsigned kDefaultTreeBound = 16;

/// Streams every tree with `n` internal nodes exactly once, in lexicographic
/// order of the text encoding.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(unsigned n, unsigned bound = kDefaultTreeBound);

  std::optional<BinaryTree> next();

 private:
  bool advance();

  unsigned n_;
  std::vector<bool> word_;  // preorder kinds, true = internal
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` for every tree of size `n` in enumeration order.
void for_each_tree(unsigned n, const std::function<void(const BinaryTree&)>& visit,
                   unsigned bound = kDefaultTreeBound);

/// Uniformly random tree with `n` internal nodes (Rémy's leaf-insertion growth).
BinaryTree random_tree(unsigned n, std::uint64_t seed);

class Rng;
BinaryTree random_tree(unsigned n, Rng& rng);

}  // namespace regred
