#pragma once

// Schröder trees: plane trees whose internal nodes have at least two
// children. A Schröder tree with n+1 leaves labels a face of the
// (n-1)-dimensional associahedron; binary ones are its vertices.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/binary_tree.hpp"

namespace tamari {

class SchroederTree {
 public:
  /// A leaf.
  SchroederTree() = default;

  /// Internal node; throws std::invalid_argument for fewer than two children.
  static SchroederTree node(std::vector<SchroederTree> children);
  /// One internal node with `leaves` leaf children (leaves >= 2).
  static SchroederTree corolla(std::size_t leaves);
  /// Re-reads a binary tree: empty subtrees become leaves.
  static SchroederTree from_binary(const BinaryTree& t);

  bool is_leaf() const noexcept { return children_.empty(); }
  const std::vector<SchroederTree>& children() const noexcept { return children_; }
  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t internal_count() const noexcept { return internal_; }
  /// n = leaves - 1.
  std::size_t n() const noexcept { return leaves_ - 1; }
  /// n minus the number of internal nodes.
  std::size_t dimension() const noexcept { return leaves_ - 1 - internal_; }
  /// Number of internal nodes other than the root.
  std::size_t internal_edge_count() const noexcept { return internal_ == 0 ? 0 : internal_ - 1; }

  friend bool operator==(const SchroederTree& a, const SchroederTree& b) noexcept;
  /// Leaf first; internal nodes compare their child lists lexicographically.
  friend std::strong_ordering operator<=>(const SchroederTree& a, const SchroederTree& b) noexcept;

 private:
  std::vector<SchroederTree> children_;
  std::size_t leaves_ = 1;
  std::size_t internal_ = 0;
};

/// Left comb for every p-ary node.
BinaryTree min_tree(const SchroederTree& f);
/// Right comb for every p-ary node.
BinaryTree max_tree(const SchroederTree& f);

/// Contract the internal edges whose lower endpoint has preorder index
/// (among non-root internal nodes, 0-based) listed as true in `contract`.
SchroederTree contract(const SchroederTree& f, const std::vector<bool>& contract);

/// The Schröder tree obtained from a binary tree by contracting the edges
/// from node i to its parent for every inorder label i with contract[i] set
/// (contract has size n+1; index 0 unused).
SchroederTree contract_binary(const BinaryTree& t, const std::vector<bool>& contract);

/// Every contraction with exactly two internal nodes, one per internal edge.
std::vector<SchroederTree> two_node_contractions(const SchroederTree& f);

/// Every contraction of f other than the corolla (including f itself).
std::vector<SchroederTree> proper_contractions(const SchroederTree& f);

/// "(c1,...,cp)" with leaves written as nothing; the leaf is "".
std::string to_string(const SchroederTree& f);
SchroederTree parse_schroeder_tree(std::string_view text);

/// All Schröder trees with the given number of leaves, sorted.
std::vector<SchroederTree> all_schroeder_trees(std::size_t leaves);

}  // namespace tamari
