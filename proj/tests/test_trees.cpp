#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "regred/exact.hpp"
#include "regred/montecarlo.hpp"
#include "regred/oracle.hpp"
#include "regred/rng.hpp"
#include "regred/trees.hpp"

using namespace regred;

namespace {

const std::string kSampleTree = "((.(((..)(..)).))(((.(..))((..).))(..)))";

// Pointer-based reference implementation, written from the recursive definitions.
struct Node {
  std::shared_ptr<Node> left, right;
  bool leaf() const { return !left; }
};
using NodePtr = std::shared_ptr<Node>;

NodePtr parse_node(const std::string& s, std::size_t& pos) {
  auto node = std::make_shared<Node>();
  if (s[pos++] == '.') return node;
  node->left = parse_node(s, pos);
  node->right = parse_node(s, pos);
  ++pos;
  return node;
}

NodePtr parse_node(const std::string& s) {
  std::size_t pos = 0;
  return parse_node(s, pos);
}

std::string print(const NodePtr& t) { return t->leaf() ? "." : "(" + print(t->left) + print(t->right) + ")"; }

unsigned reg(const NodePtr& t) {
  if (t->leaf()) return 0;
  const unsigned a = reg(t->left), b = reg(t->right);
  return a == b ? a + 1 : std::max(a, b);
}

// Φ: a node with two leaf children becomes a leaf; a node with one leaf child is
// replaced by the reduction of the other child; otherwise reduce both sides.
NodePtr phi(const NodePtr& t) {
  const bool l = t->left->leaf(), r = t->right->leaf();
  if (l && r) return std::make_shared<Node>();
  if (l) return phi(t->right);
  if (r) return phi(t->left);
  auto node = std::make_shared<Node>();
  node->left = phi(t->left);
  node->right = phi(t->right);
  return node;
}

std::size_t leaves(const NodePtr& t) { return t->leaf() ? 1 : leaves(t->left) + leaves(t->right); }

// Chains with label r: count nodes labeled r whose parent is absent or labeled differently.
void chains(const NodePtr& t, int parent_label, std::map<unsigned, std::size_t>& out) {
  const unsigned label = reg(t);
  if (static_cast<int>(label) != parent_label) ++out[label];
  if (!t->leaf()) {
    chains(t->left, static_cast<int>(label), out);
    chains(t->right, static_cast<int>(label), out);
  }
}

std::vector<std::string> all_trees(unsigned n) {
  if (n == 0) return {"."};
  std::vector<std::string> out;
  for (unsigned k = 0; k < n; ++k) {
    for (const auto& l : all_trees(k)) {
      for (const auto& r : all_trees(n - 1 - k)) out.push_back("(" + l + r + ")");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse and encode round-trip") {
  for (const std::string& s : std::vector<std::string>{".", "(..)", "(.(..))", kSampleTree}) CHECK(BinaryTree::parse(s).encode() == s);
  const auto t = BinaryTree::parse(kSampleTree);
  CHECK(t.size() == 13);
  CHECK(t.leaf_count() == 14);
  CHECK(t.node_count() == 27);
  CHECK(BinaryTree::join(BinaryTree::leaf(), BinaryTree::parse("(..)")).encode() == "(.(..))");
  CHECK(t.subtree(1).encode() == "(.(((..)(..)).))");
  CHECK(t.subtree(t.right_child(0)).encode() == "(((.(..))((..).))(..))");
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const std::string& s) -> std::size_t {
    try {
      BinaryTree::parse(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("(.x)") == 2);
  CHECK(position_of("(..") == 3);
  CHECK(position_of("(..).") == 4);
  CHECK(position_of("( ..)") == 1);
  CHECK_THROWS_AS(BinaryTree::parse(")"), std::invalid_argument);
}

TEST_CASE("register function") {
  CHECK(register_function(BinaryTree::leaf()) == 0);
  CHECK(register_function(BinaryTree::parse("(..)")) == 1);
  CHECK(register_function(BinaryTree::parse(kSampleTree)) == 3);
  CHECK(register_function(BinaryTree::parse("(.(.(..)))")) == 1);
  CHECK(register_function(BinaryTree::parse("((..)(..))")) == 2);
}

TEST_CASE("sample tree labels and branches") {
  const auto t = BinaryTree::parse(kSampleTree);
  const auto labels = label_registers(t);
  CHECK(labels.root() == 3);
  std::vector<unsigned> per_label(4, 0);
  for (unsigned l : labels.labels) ++per_label.at(l);
  CHECK(per_label == std::vector<unsigned>{14, 7, 5, 1});
  const auto profile = branch_profile(t);
  CHECK(profile.counts == std::vector<std::uint64_t>{14, 5, 2, 1});
  CHECK(profile.node_counts == std::vector<std::uint64_t>{14, 7, 5, 1});
  CHECK(count_r_branches(t, 1) == 5);
  CHECK(count_r_branches(t, 4) == 0);
  CHECK(total_branches(t) == 22);
}

TEST_CASE("small trees") {
  CHECK(label_registers(BinaryTree::leaf()).labels == std::vector<unsigned>{0});
  CHECK(label_registers(BinaryTree::parse("(..)")).labels == std::vector<unsigned>{1, 0, 0});
  CHECK(branch_profile(BinaryTree::leaf()).counts == std::vector<std::uint64_t>{1});
  CHECK(branch_profile(BinaryTree::parse("(..)")).counts == std::vector<std::uint64_t>{2, 1});
  CHECK(count_r_branches(BinaryTree::leaf(), 0) == 1);
  CHECK(total_branches(BinaryTree::leaf()) == 1);
  CHECK(total_branches(BinaryTree::parse("(..)")) == 3);
}

TEST_CASE("reduction") {
  CHECK(reduce_tree(BinaryTree::parse("(..)")).is_leaf());
  CHECK_THROWS_AS(reduce_tree(BinaryTree::leaf()), std::invalid_argument);
  const auto reduced = reduce_tree(BinaryTree::parse(kSampleTree));
  CHECK(reduced.encode() == "((..)((..).))");
  CHECK(reduced.size() == 4);
  CHECK(register_function(reduced) == 2);
  CHECK(reduce_tree_times(BinaryTree::parse(kSampleTree), 3).is_leaf());
  CHECK_THROWS(reduce_tree_times(BinaryTree::parse(kSampleTree), 4));
  // A unary chain longer than two contracts completely.
  CHECK(reduce_tree(BinaryTree::parse("(.(.(.(..))))")).is_leaf());
}

TEST_CASE("reduction and labels match the recursive reference for every tree up to size 10") {
  for (unsigned n = 1; n <= 10; ++n) {
    for_each_tree(n, [&](const BinaryTree& t) {
      const auto ref = parse_node(t.encode());
      const unsigned r = reg(ref);
      REQUIRE(register_function(t) == r);
      const auto reduced = reduce_tree(t);
      REQUIRE(reduced.encode() == print(phi(ref)));
      REQUIRE(register_function(reduced) == r - 1);
      REQUIRE(2 * reduced.size() <= t.size() - 1);

      std::map<unsigned, std::size_t> expected;
      chains(ref, -1, expected);
      const auto profile = branch_profile(t);
      REQUIRE(profile.counts.size() == r + 1);
      for (unsigned q = 0; q <= r; ++q) REQUIRE(profile.counts[q] == expected[q]);

      BinaryTree current = t;
      for (unsigned q = 0; q <= r; ++q) {
        REQUIRE(count_r_branches(t, q) == current.leaf_count());
        REQUIRE(current.is_leaf() == (q == r));
        if (q < r) current = reduce_tree(current);
      }
    });
  }
}

TEST_CASE("branch profile invariants for every tree up to size 12") {
  for (unsigned n = 0; n <= 12; ++n) {
    std::uint64_t trees = 0;
    for_each_tree(n, [&](const BinaryTree& t) {
      ++trees;
      const auto p = branch_profile(t);
      REQUIRE(p.counts.front() == n + 1);
      REQUIRE(p.counts.back() == 1);
      std::uint64_t nodes = 0;
      for (std::size_t r = 0; r < p.counts.size(); ++r) {
        REQUIRE(p.counts[r] <= p.node_counts[r]);
        nodes += p.node_counts[r];
      }
      REQUIRE(nodes == 2 * n + 1);
      if (n > 0) REQUIRE(2 * reduce_tree(t).size() <= n - 1);
    });
    CHECK(Integer(trees) == catalan(n));
  }
}

TEST_CASE("enumeration order and counts") {
  for (unsigned n = 0; n <= 7; ++n) {
    std::vector<std::string> got;
    for_each_tree(n, [&](const BinaryTree& t) { got.push_back(t.encode()); });
    CHECK(got == all_trees(n));
  }
  std::set<std::string> seen;
  for_each_tree(10, [&](const BinaryTree& t) { seen.insert(t.encode()); });
  CHECK(seen.size() == 16796);
  for (unsigned n : {13u, 14u}) {
    std::uint64_t count = 0;
    std::string previous;
    bool increasing = true;
    for_each_tree(n, [&](const BinaryTree& t) {
      auto s = t.encode();
      increasing = increasing && s > previous;
      previous = std::move(s);
      ++count;
    });
    CHECK(increasing);
    CHECK(Integer(count) == catalan(n));
  }
  CHECK_THROWS_AS(TreeEnumerator(17), std::out_of_range);
  CHECK_NOTHROW(TreeEnumerator(17, 17));
}

TEST_CASE("census merges independently of jobs") {
  const auto a = tree_census(9, 1);
  const auto b = tree_census(9, 4);
  CHECK(a.trees == 4862);
  CHECK(a.branch_sum == b.branch_sum);
  CHECK(a.branch_square_sum == b.branch_square_sum);
  CHECK(a.register_counts == b.register_counts);
  CHECK(a.mean_r_branches(0) == 10);
  CHECK(a.var_r_branches(0) == 0);
}

TEST_CASE("random trees") {
  CHECK(random_tree(0, 7).is_leaf());
  CHECK(random_tree(1, 7).encode() == "(..)");
  CHECK(random_tree(40, 11) == random_tree(40, 11));
  CHECK(random_tree(40, 11).size() == 40);

  std::map<std::string, std::size_t> index;
  for_each_tree(8, [&](const BinaryTree& t) { index.emplace(t.encode(), index.size()); });
  std::vector<std::uint64_t> counts(index.size(), 0);
  Rng rng(20260401);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[index.at(random_tree(8, rng).encode())];
  const double stat = chi_square_uniform(counts);
  CHECK(stat < chi_square_quantile(static_cast<double>(counts.size() - 1), 0.999));
}
