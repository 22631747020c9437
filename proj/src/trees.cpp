#include "regred/trees.hpp"

#include <algorithm>
#include <limits>

#include "regred/rng.hpp"

namespace regred {

namespace {

unsigned combine_labels(unsigned left, unsigned right) {
  return left == right ? left + 1 : std::max(left, right);
}

}  // namespace

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  const auto left_offset = static_cast<Index>(1);
  const auto right_offset = static_cast<Index>(1 + left.node_count());
  std::vector<Index> nodes;
  nodes.reserve(1 + left.node_count() + right.node_count());
  nodes.push_back(right_offset);
  for (Index r : left.right_) nodes.push_back(r == 0 ? 0 : r + left_offset);
  for (Index r : right.right_) nodes.push_back(r == 0 ? 0 : r + right_offset);
  return BinaryTree(std::move(nodes));
}

BinaryTree BinaryTree::parse(std::string_view text) {
  struct Open {
    Index node;
    int children_done;
  };
  std::vector<Index> nodes;
  std::vector<Open> stack;
  bool root_done = false;

  auto complete_child = [&] {
    if (stack.empty()) {
      root_done = true;
    } else {
      ++stack.back().children_done;
    }
  };

  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '(' || c == '.') {
      if (root_done) throw ParseError("trailing characters after complete tree", pos);
      if (!stack.empty() && stack.back().children_done == 2) throw ParseError("expected ')'", pos);
      const auto j = static_cast<Index>(nodes.size());
      nodes.push_back(0);
      if (!stack.empty() && stack.back().children_done == 1) nodes[stack.back().node] = j;
      if (c == '(') {
        stack.push_back({j, 0});
      } else {
        complete_child();
      }
    } else if (c == ')') {
      if (stack.empty() || stack.back().children_done != 2) throw ParseError("unexpected ')'", pos);
      stack.pop_back();
      complete_child();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  if (!root_done) throw ParseError("unexpected end of tree", text.size());
  return BinaryTree(std::move(nodes));
}

BinaryTree BinaryTree::from_preorder(const std::vector<bool>& internal) {
  const std::size_t len = internal.size();
  std::ptrdiff_t pending = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (pending <= 0) throw std::invalid_argument("preorder word: trailing nodes");
    pending += internal[i] ? 1 : -1;
  }
  if (len == 0 || pending != 0) throw std::invalid_argument("preorder word: incomplete tree");

  std::vector<Index> end(len + 1, 0);
  std::vector<Index> nodes(len, 0);
  for (std::size_t j = len; j-- > 0;) {
    if (internal[j]) {
      nodes[j] = end[j + 1];
      end[j] = end[end[j + 1]];
    } else {
      end[j] = static_cast<Index>(j + 1);
    }
  }
  return BinaryTree(std::move(nodes));
}

std::string BinaryTree::encode() const {
  std::string out;
  out.reserve(right_.size() + size());
  std::vector<int> remaining;
  for (Index r : right_) {
    if (r != 0) {
      out.push_back('(');
      remaining.push_back(2);
      continue;
    }
    out.push_back('.');
    while (!remaining.empty() && --remaining.back() == 0) {
      remaining.pop_back();
      out.push_back(')');
    }
  }
  return out;
}

std::size_t BinaryTree::subtree_end(std::size_t node) const {
  // An internal node fills one open slot and opens two; a leaf fills one.
  std::size_t open = 1;
  for (std::size_t k = node;; ++k) {
    if (is_internal(k)) {
      ++open;
    } else if (--open == 0) {
      return k + 1;
    }
  }
}

BinaryTree BinaryTree::subtree(std::size_t node) const {
  const std::size_t end = subtree_end(node);
  std::vector<Index> nodes;
  nodes.reserve(end - node);
  const auto offset = static_cast<Index>(node);
  for (std::size_t k = node; k < end; ++k) nodes.push_back(right_[k] == 0 ? 0 : right_[k] - offset);
  return BinaryTree(std::move(nodes));
}

RegisterLabeling label_registers(const BinaryTree& tree) {
  RegisterLabeling result;
  result.labels.assign(tree.node_count(), 0);
  auto& labels = result.labels;
  // Children follow their parent in preorder, so a reverse sweep is bottom-up.
  for (std::size_t i = tree.node_count(); i-- > 0;) {
    if (tree.is_internal(i)) {
      labels[i] = combine_labels(labels[tree.left_child(i)], labels[tree.right_child(i)]);
    }
  }
  return result;
}

unsigned register_function(const BinaryTree& tree) { return label_registers(tree).root(); }

BinaryTree reduce_tree(const BinaryTree& tree) {
  if (tree.is_leaf()) throw std::invalid_argument("reduce_tree: a leaf cannot be reduced");

  // Follow unary chains (exactly one internal child) down to the node that survives.
  auto contract = [&](std::size_t v) {
    for (;;) {
      const bool left = tree.is_internal(tree.left_child(v));
      const bool right = tree.is_internal(tree.right_child(v));
      if (left == right) return v;
      v = left ? tree.left_child(v) : tree.right_child(v);
    }
  };

  std::vector<bool> kinds;
  kinds.reserve(tree.size());
  std::vector<std::size_t> stack{contract(0)};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (!tree.is_internal(tree.left_child(v))) {
      kinds.push_back(false);
    } else {
      kinds.push_back(true);
      stack.push_back(contract(tree.right_child(v)));
      stack.push_back(contract(tree.left_child(v)));
    }
  }
  return BinaryTree::from_preorder(kinds);
}

BinaryTree reduce_tree_times(const BinaryTree& tree, unsigned times) {
  BinaryTree current = tree;
  for (unsigned i = 0; i < times; ++i) current = reduce_tree(current);
  return current;
}

BranchProfile branch_profile(const BinaryTree& tree) {
  const auto labels = label_registers(tree).labels;
  BranchProfile profile;
  const unsigned top = labels.front();
  profile.counts.assign(top + 1, 0);
  profile.node_counts.assign(top + 1, 0);
  ++profile.counts[top];
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    ++profile.node_counts[labels[i]];
    if (!tree.is_internal(i)) continue;
    for (std::size_t child : {tree.left_child(i), tree.right_child(i)}) {
      if (labels[child] != labels[i]) ++profile.counts[labels[child]];
    }
  }
  return profile;
}

std::uint64_t count_r_branches(const BinaryTree& tree, unsigned r) {
  const auto profile = branch_profile(tree);
  return r < profile.counts.size() ? profile.counts[r] : 0;
}

std::uint64_t total_branches(const BinaryTree& tree) {
  const auto profile = branch_profile(tree);
  std::uint64_t total = 0;
  for (auto c : profile.counts) total += c;
  return total;
}

TreeEnumerator::TreeEnumerator(unsigned n, unsigned bound) : n_(n) {
  if (n > bound) {
    throw std::out_of_range("tree enumeration size " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  }
  // '(' sorts before '.', so the first word opens as many internal nodes as possible.
  word_.assign(2 * n + 1, false);
  std::fill_n(word_.begin(), n, true);
}

bool TreeEnumerator::advance() {
  const std::size_t len = word_.size();
  std::size_t ones = n_;
  std::size_t zeros = n_ + 1;
  for (std::size_t i = len; i-- > 0;) {
    // ones/zeros count the prefix word_[0..i] inclusive.
    if (word_[i]) {
      const std::size_t prefix_ones = ones - 1;
      const std::size_t prefix_zeros = zeros;
      if (prefix_zeros + 1 <= prefix_ones) {
        word_[i] = false;
        // Smallest completion: all remaining internal nodes first, then leaves.
        const std::size_t remaining_ones = n_ - prefix_ones;
        for (std::size_t k = i + 1; k < len; ++k) word_[k] = k - i <= remaining_ones;
        return true;
      }
      --ones;
    } else {
      --zeros;
    }
  }
  return false;
}

std::optional<BinaryTree> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return BinaryTree::from_preorder(word_);
}

void for_each_tree(unsigned n, const std::function<void(const BinaryTree&)>& visit, unsigned bound) {
  TreeEnumerator trees(n, bound);
  while (auto t = trees.next()) visit(*t);
}

BinaryTree random_tree(unsigned n, Rng& rng) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const std::size_t total = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<std::uint32_t> left(total, kNone), right(total, kNone), parent(total, kNone);
  std::uint32_t root = 0;
  std::uint32_t used = 1;

  for (unsigned k = 0; k < n; ++k) {
    const std::uint64_t draw = rng.below(2 * static_cast<std::uint64_t>(used));
    const auto target = static_cast<std::uint32_t>(draw / 2);
    const bool new_leaf_left = (draw % 2) == 0;
    const std::uint32_t node = used++;
    const std::uint32_t fresh = used++;

    const std::uint32_t up = parent[target];
    if (up == kNone) {
      root = node;
    } else if (left[up] == target) {
      left[up] = node;
    } else {
      right[up] = node;
    }
    parent[node] = up;
    left[node] = new_leaf_left ? fresh : target;
    right[node] = new_leaf_left ? target : fresh;
    parent[target] = node;
    parent[fresh] = node;
  }

  std::vector<bool> kinds;
  kinds.reserve(total);
  std::vector<std::uint32_t> stack{root};
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    kinds.push_back(left[v] != kNone);
    if (left[v] != kNone) {
      stack.push_back(right[v]);
      stack.push_back(left[v]);
    }
  }
  return BinaryTree::from_preorder(kinds);
}

BinaryTree random_tree(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

}  // namespace regred
