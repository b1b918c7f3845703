#include "tamari/binary_tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace tamari {

namespace {

std::size_t mix_hash(std::size_t a, std::size_t b) {
  // boost::hash_combine style, applied twice so (L,R) and (R,L) differ.
  std::size_t h = a * 0x100000001b3ULL;
  h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void require_same_size(const BinaryTree& s, const BinaryTree& t, const char* what) {
  if (s.size() != t.size()) {
    throw std::invalid_argument(std::string(what) + ": trees of different sizes (" +
                                std::to_string(s.size()) + " vs " + std::to_string(t.size()) + ")");
  }
}

}  // namespace

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  const std::size_t size = left.size() + right.size() + 1;
  const std::size_t hash = mix_hash(left.hash(), right.hash()) + size;
  return BinaryTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), size, hash}));
}

BinaryTree BinaryTree::single() { return node(BinaryTree(), BinaryTree()); }

BinaryTree BinaryTree::left_comb(std::size_t n) {
  BinaryTree t;
  for (std::size_t i = 0; i < n; ++i) t = node(t, BinaryTree());
  return t;
}

BinaryTree BinaryTree::right_comb(std::size_t n) {
  BinaryTree t;
  for (std::size_t i = 0; i < n; ++i) t = node(BinaryTree(), t);
  return t;
}

const BinaryTree& BinaryTree::left() const {
  if (!node_) throw std::logic_error("left() of the empty tree");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (!node_) throw std::logic_error("right() of the empty tree");
  return node_->right;
}

bool operator==(const BinaryTree& a, const BinaryTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.empty() || b.empty()) return false;
  if (a.node_->size != b.node_->size || a.node_->hash != b.node_->hash) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal nonzero sizes from here on.
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

LabeledTree label_inorder(const BinaryTree& t) {
  LabeledTree out;
  const int n = static_cast<int>(t.size());
  out.n = n;
  out.left.assign(n + 1, 0);
  out.right.assign(n + 1, 0);
  out.parent.assign(n + 1, 0);
  out.span_lo.assign(n + 1, 0);
  out.span_hi.assign(n + 1, 0);
  if (n == 0) return out;
  // Returns the label of the subtree's root; `offset` is the number of nodes
  // preceding the subtree in inorder.
  auto visit = [&](auto&& self, const BinaryTree& sub, int offset) -> int {
    if (sub.empty()) return 0;
    const int label = offset + static_cast<int>(sub.left().size()) + 1;
    const int l = self(self, sub.left(), offset);
    const int r = self(self, sub.right(), label);
    out.left[label] = l;
    out.right[label] = r;
    if (l) out.parent[l] = label;
    if (r) out.parent[r] = label;
    out.span_lo[label] = offset + 1;
    out.span_hi[label] = offset + static_cast<int>(sub.size());
    return label;
  };
  out.root = visit(visit, t, 0);
  return out;
}

namespace {

int count_right_edges(const BinaryTree& t) {
  if (t.empty()) return 0;
  return (t.right().empty() ? 0 : 1) + count_right_edges(t.left()) + count_right_edges(t.right());
}

}  // namespace

int des(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("des: empty tree");
  return count_right_edges(t);
}

int asc(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("asc: empty tree");
  return static_cast<int>(t.size()) - 1 - count_right_edges(t);
}

namespace {

void collect_up(const BinaryTree& t, std::vector<BinaryTree>& out) {
  if (t.empty()) return;
  const BinaryTree& x = t.left();
  if (!x.empty()) {
    // y(x(A,B),C) -> x(A,y(B,C))
    out.push_back(BinaryTree::node(x.left(), BinaryTree::node(x.right(), t.right())));
  }
  std::vector<BinaryTree> sub;
  collect_up(t.left(), sub);
  for (auto& l : sub) out.push_back(BinaryTree::node(std::move(l), t.right()));
  sub.clear();
  collect_up(t.right(), sub);
  for (auto& r : sub) out.push_back(BinaryTree::node(t.left(), std::move(r)));
}

void collect_down(const BinaryTree& t, std::vector<BinaryTree>& out) {
  if (t.empty()) return;
  const BinaryTree& y = t.right();
  if (!y.empty()) {
    // x(A,y(B,C)) -> y(x(A,B),C)
    out.push_back(BinaryTree::node(BinaryTree::node(t.left(), y.left()), y.right()));
  }
  std::vector<BinaryTree> sub;
  collect_down(t.left(), sub);
  for (auto& l : sub) out.push_back(BinaryTree::node(std::move(l), t.right()));
  sub.clear();
  collect_down(t.right(), sub);
  for (auto& r : sub) out.push_back(BinaryTree::node(t.left(), std::move(r)));
}

}  // namespace

std::vector<BinaryTree> rotations_up(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  collect_up(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryTree> rotations_down(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  collect_down(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> right_subtree_sizes(const BinaryTree& t) {
  std::vector<int> out;
  out.reserve(t.size());
  auto visit = [&](auto&& self, const BinaryTree& sub) -> void {
    if (sub.empty()) return;
    self(self, sub.left());
    out.push_back(static_cast<int>(sub.right().size()));
    self(self, sub.right());
  };
  visit(visit, t);
  return out;
}

bool tamari_leq(const BinaryTree& s, const BinaryTree& t) {
  require_same_size(s, t, "tamari_leq");
  const auto rs = right_subtree_sizes(s);
  const auto rt = right_subtree_sizes(t);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] > rt[i]) return false;
  }
  return true;
}

bool tamari_leq_by_rotations(const BinaryTree& s, const BinaryTree& t) {
  require_same_size(s, t, "tamari_leq_by_rotations");
  std::unordered_set<BinaryTree> seen{s};
  std::deque<BinaryTree> queue{s};
  while (!queue.empty()) {
    BinaryTree cur = std::move(queue.front());
    queue.pop_front();
    if (cur == t) return true;
    for (auto& next : rotations_up(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

CanopyVector canopy(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("canopy: empty tree");
  const auto r = right_subtree_sizes(t);
  CanopyVector out;
  out.reserve(r.size() - 1);
  for (std::size_t j = 0; j + 1 < r.size(); ++j) out.push_back(r[j] == 0 ? Sign::Minus : Sign::Plus);
  return out;
}

CanopyVector canopy_by_right_leaves(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("canopy: empty tree");
  // Leaves in inorder, each tagged by whether it fills a right child slot.
  std::vector<bool> right_leaf;
  auto visit = [&](auto&& self, const BinaryTree& sub, bool is_right) -> void {
    if (sub.empty()) {
      right_leaf.push_back(is_right);
      return;
    }
    self(self, sub.left(), false);
    self(self, sub.right(), true);
  };
  visit(visit, t, false);
  // Inner leaves 1..n-1 sit between consecutive nodes.
  CanopyVector out;
  for (std::size_t j = 1; j + 1 < right_leaf.size(); ++j) out.push_back(right_leaf[j] ? Sign::Minus : Sign::Plus);
  return out;
}

CanopyVector canopy_by_paths(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("canopy: empty tree");
  const LabeledTree lt = label_inorder(t);
  CanopyVector out;
  for (int j = 1; j < lt.n; ++j) {
    bool below = false;
    for (int v = lt.parent[j]; v != 0; v = lt.parent[v]) {
      if (v == j + 1) {
        below = true;
        break;
      }
    }
    out.push_back(below ? Sign::Minus : Sign::Plus);
  }
  return out;
}

CanopyVector canopy_by_left_subtrees(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("canopy: empty tree");
  const LabeledTree lt = label_inorder(t);
  CanopyVector out;
  for (int j = 1; j < lt.n; ++j) out.push_back(lt.left[j + 1] != 0 ? Sign::Minus : Sign::Plus);
  return out;
}

int agree(const BinaryTree& s, const BinaryTree& t) {
  require_same_size(s, t, "agree");
  const auto cs = canopy(s);
  const auto ct = canopy(t);
  int count = 0;
  for (std::size_t j = 0; j < cs.size(); ++j) count += cs[j] == ct[j];
  return count;
}

int ell(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("ell: empty tree");
  int edges = 0;
  for (const BinaryTree* cur = &t.left(); !cur->empty(); cur = &cur->left()) ++edges;
  return edges;
}

BinaryTree graft_left(const BinaryTree& lower, const BinaryTree& host) {
  if (lower.empty() || host.empty()) throw std::invalid_argument("graft_left: empty operand");
  if (host.left().empty()) return BinaryTree::node(lower, host.right());
  return BinaryTree::node(graft_left(lower, host.left()), host.right());
}

BinaryTree graft_right(const BinaryTree& host, const BinaryTree& lower) {
  if (lower.empty() || host.empty()) throw std::invalid_argument("graft_right: empty operand");
  if (host.right().empty()) return BinaryTree::node(host.left(), lower);
  return BinaryTree::node(host.left(), graft_right(host.right(), lower));
}

BinaryTree compose_grafting(const std::vector<BinaryTree>& parts) {
  if (parts.empty()) throw std::invalid_argument("compose_grafting: no parts");
  BinaryTree acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = graft_left(acc, parts[i]);
  return acc;
}

namespace {

// The ell(t)+1 pieces obtained by cutting every left-branch edge, bottom first.
std::vector<BinaryTree> left_branch_pieces(const BinaryTree& t) {
  std::vector<BinaryTree> pieces;
  for (const BinaryTree* cur = &t; !cur->empty(); cur = &cur->left()) {
    pieces.push_back(BinaryTree::node(BinaryTree(), cur->right()));
  }
  std::reverse(pieces.begin(), pieces.end());
  return pieces;
}

// Write s = a / b with n(a) = k >= 1 and b nonempty, if possible.
bool split_left(const BinaryTree& s, std::size_t k, BinaryTree& a, BinaryTree& b) {
  if (s.empty()) return false;
  const std::size_t nl = s.left().size();
  if (nl == k) {
    a = s.left();
    b = BinaryTree::node(BinaryTree(), s.right());
    return true;
  }
  if (nl < k) return false;
  BinaryTree inner;
  if (!split_left(s.left(), k, a, inner)) return false;
  b = BinaryTree::node(inner, s.right());
  return true;
}

}  // namespace

std::vector<std::vector<BinaryTree>> grafting_decompositions(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("grafting_decompositions: empty tree");
  const auto pieces = left_branch_pieces(t);
  const std::size_t cuts = pieces.size() - 1;
  std::vector<std::vector<BinaryTree>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cuts); ++mask) {
    std::vector<BinaryTree> parts{pieces[0]};
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      if (mask >> (i - 1) & 1) {
        parts.push_back(pieces[i]);
      } else {
        parts.back() = graft_left(parts.back(), pieces[i]);
      }
    }
    out.push_back(std::move(parts));
  }
  return out;
}

std::vector<IntervalComponent> decompose_interval(const BinaryTree& s, const BinaryTree& t) {
  require_same_size(s, t, "decompose_interval");
  if (s.empty()) throw std::invalid_argument("decompose_interval: empty trees");
  if (!tamari_leq(s, t)) throw std::invalid_argument("decompose_interval: not an interval");
  const auto upper = left_branch_pieces(t);
  std::vector<IntervalComponent> out;
  BinaryTree rest = s;
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
    BinaryTree a, b;
    if (!split_left(rest, upper[i].size(), a, b)) {
      throw std::logic_error("decompose_interval: lower tree does not split along the upper tree");
    }
    out.push_back({a, upper[i]});
    rest = b;
  }
  out.push_back({rest, upper.back()});
  return out;
}

std::string to_string(const BinaryTree& t) {
  std::string out;
  auto visit = [&](auto&& self, const BinaryTree& sub) -> void {
    if (sub.empty()) return;
    out.push_back('(');
    self(self, sub.left());
    out.push_back(',');
    self(self, sub.right());
    out.push_back(')');
  };
  visit(visit, t);
  return out;
}

BinaryTree parse_binary_tree(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument("malformed binary tree at offset " + std::to_string(pos) + ": " + why);
  };
  auto parse = [&](auto&& self) -> BinaryTree {
    if (pos >= text.size() || text[pos] != '(') return BinaryTree();
    ++pos;
    BinaryTree l = self(self);
    if (pos >= text.size() || text[pos] != ',') fail("expected ','");
    ++pos;
    BinaryTree r = self(self);
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    return BinaryTree::node(std::move(l), std::move(r));
  };
  BinaryTree t = parse(parse);
  if (pos != text.size()) fail("trailing characters");
  return t;
}

}  // namespace tamari
