#pragma once

// Plane binary trees as elements of the Tamari lattice.
//
// Nodes are labeled 1..n in inorder; labels are never stored and are
// recomputed on demand (see LabeledTree). Edges are oriented towards the
// root: a right child i of j is a descent (i > j), a left child is an ascent.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

class BinaryTree {
 public:
  /// The empty tree (zero nodes).
  BinaryTree() = default;

  static BinaryTree node(BinaryTree left, BinaryTree right);
  /// The single-node tree Y.
  static BinaryTree single();
  /// Every node has an empty right subtree: the Tamari minimum.
  static BinaryTree left_comb(std::size_t n);
  /// Every node has an empty left subtree: the Tamari maximum.
  static BinaryTree right_comb(std::size_t n);

  bool empty() const noexcept { return node_ == nullptr; }
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  const BinaryTree& left() const;
  const BinaryTree& right() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) noexcept;
  /// Canonical total order: by size, then left subtree, then right subtree.
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) noexcept;

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  std::size_t size;
  std::size_t hash;
};

inline std::size_t BinaryTree::size() const noexcept { return node_ ? node_->size : 0; }
inline std::size_t BinaryTree::hash() const noexcept { return node_ ? node_->hash : 0x9e3779b9u; }

struct BinaryTreeHash {
  std::size_t operator()(const BinaryTree& t) const noexcept { return t.hash(); }
};

/// Child/parent arrays indexed by inorder label 1..n; 0 means "none".
struct LabeledTree {
  int n = 0;
  int root = 0;
  std::vector<int> left, right, parent;
  /// Smallest and largest label in the subtree rooted at each node.
  std::vector<int> span_lo, span_hi;
};

LabeledTree label_inorder(const BinaryTree& t);

/// Number of descents (right-child edges). Throws on the empty tree.
int des(const BinaryTree& t);
/// Number of ascents (left-child edges). Throws on the empty tree.
int asc(const BinaryTree& t);

/// Trees obtained by one right rotation (the upper covers), sorted.
std::vector<BinaryTree> rotations_up(const BinaryTree& t);
/// Trees obtained by one left rotation (the lower covers), sorted.
std::vector<BinaryTree> rotations_down(const BinaryTree& t);

/// Size of the right subtree of each node, in inorder. The Tamari order is
/// the componentwise order on these vectors.
std::vector<int> right_subtree_sizes(const BinaryTree& t);

/// s <= t in the Tamari lattice (vector test). Throws on size mismatch.
bool tamari_leq(const BinaryTree& s, const BinaryTree& t);
/// Reference implementation: breadth-first search along right rotations.
bool tamari_leq_by_rotations(const BinaryTree& s, const BinaryTree& t);

enum class Sign : std::uint8_t { Minus, Plus };
using CanopyVector = std::vector<Sign>;

/// Entry j (0-based, node j+1) is Minus iff node j+1 has an empty right subtree.
CanopyVector canopy(const BinaryTree& t);
/// Equivalent characterizations of the canopy, kept for cross-checking.
CanopyVector canopy_by_right_leaves(const BinaryTree& t);
CanopyVector canopy_by_paths(const BinaryTree& t);
CanopyVector canopy_by_left_subtrees(const BinaryTree& t);

/// Number of positions where the canopies of s and t coincide.
int agree(const BinaryTree& s, const BinaryTree& t);

/// Number of node-to-node edges on the path from the root to the leftmost leaf.
int ell(const BinaryTree& t);

/// lower / host: graft the root of `lower` on the leftmost leaf of `host`.
BinaryTree graft_left(const BinaryTree& lower, const BinaryTree& host);
/// host \ lower: graft the root of `lower` on the rightmost leaf of `host`.
BinaryTree graft_right(const BinaryTree& host, const BinaryTree& lower);

/// Compose S_0 / S_1 / ... / S_k.
BinaryTree compose_grafting(const std::vector<BinaryTree>& parts);

/// All 2^ell(t) grafting decompositions S_0 / ... / S_k of t.
std::vector<std::vector<BinaryTree>> grafting_decompositions(const BinaryTree& t);

struct IntervalComponent {
  BinaryTree lower;
  BinaryTree upper;
  friend bool operator==(const IntervalComponent&, const IntervalComponent&) = default;
};

/// Maximal decomposition S = S_0/.../S_l, T = T_0/.../T_l with l = ell(t)
/// and n(S_i) = n(T_i). Throws std::invalid_argument unless s <= t.
std::vector<IntervalComponent> decompose_interval(const BinaryTree& s, const BinaryTree& t);

/// Parenthesized form: a node is "(L,R)", an empty subtree is written as
/// nothing. The single node is "(,)"; the empty tree is "".
std::string to_string(const BinaryTree& t);
/// Inverse of to_string. Throws std::invalid_argument on malformed input.
BinaryTree parse_binary_tree(std::string_view text);

}  // namespace tamari

template <>
struct std::hash<tamari::BinaryTree> {
  std::size_t operator()(const tamari::BinaryTree& t) const noexcept { return t.hash(); }
};
