#include "tamari/schroeder_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tamari {

SchroederTree SchroederTree::node(std::vector<SchroederTree> children) {
  if (children.size() < 2) throw std::invalid_argument("Schröder tree node needs at least two children");
  SchroederTree f;
  f.leaves_ = 0;
  f.internal_ = 1;
  for (const auto& c : children) {
    f.leaves_ += c.leaves_;
    f.internal_ += c.internal_;
  }
  f.children_ = std::move(children);
  return f;
}

SchroederTree SchroederTree::corolla(std::size_t leaves) {
  return node(std::vector<SchroederTree>(leaves));
}

SchroederTree SchroederTree::from_binary(const BinaryTree& t) {
  if (t.empty()) return SchroederTree();
  return node({from_binary(t.left()), from_binary(t.right())});
}

bool operator==(const SchroederTree& a, const SchroederTree& b) noexcept {
  return a.leaves_ == b.leaves_ && a.internal_ == b.internal_ && a.children_ == b.children_;
}

std::strong_ordering operator<=>(const SchroederTree& a, const SchroederTree& b) noexcept {
  const std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  return a.children_.size() <=> b.children_.size();
}

namespace {

BinaryTree comb(const SchroederTree& f, bool right) {
  if (f.is_leaf()) return BinaryTree();
  std::vector<BinaryTree> parts;
  for (const auto& c : f.children()) parts.push_back(comb(c, right));
  if (right) {
    BinaryTree acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = BinaryTree::node(parts[i], acc);
    return acc;
  }
  BinaryTree acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = BinaryTree::node(acc, parts[i]);
  return acc;
}

SchroederTree rebuild(const SchroederTree& f, const std::vector<bool>& merge, std::size_t& idx) {
  std::vector<SchroederTree> kids;
  for (const auto& child : f.children()) {
    if (child.is_leaf()) {
      kids.emplace_back();
      continue;
    }
    const bool contract_here = merge.at(idx++);
    SchroederTree r = rebuild(child, merge, idx);
    if (contract_here) {
      kids.insert(kids.end(), r.children().begin(), r.children().end());
    } else {
      kids.push_back(std::move(r));
    }
  }
  return SchroederTree::node(std::move(kids));
}

}  // namespace

BinaryTree min_tree(const SchroederTree& f) { return comb(f, false); }
BinaryTree max_tree(const SchroederTree& f) { return comb(f, true); }

SchroederTree contract(const SchroederTree& f, const std::vector<bool>& merge) {
  if (merge.size() != f.internal_edge_count()) {
    throw std::invalid_argument("contract: expected one flag per internal edge");
  }
  if (f.is_leaf()) return f;
  std::size_t idx = 0;
  return rebuild(f, merge, idx);
}

SchroederTree contract_binary(const BinaryTree& t, const std::vector<bool>& merge) {
  if (merge.size() != t.size() + 1) throw std::invalid_argument("contract_binary: flag vector size must be n+1");
  auto build = [&](auto&& self, const BinaryTree& sub, int offset) -> SchroederTree {
    if (sub.empty()) return SchroederTree();
    const int label = offset + static_cast<int>(sub.left().size()) + 1;
    std::vector<SchroederTree> kids;
    auto attach = [&](const BinaryTree& child, int child_offset) {
      if (child.empty()) {
        kids.emplace_back();
        return;
      }
      const int child_label = child_offset + static_cast<int>(child.left().size()) + 1;
      SchroederTree r = self(self, child, child_offset);
      if (merge[child_label]) {
        kids.insert(kids.end(), r.children().begin(), r.children().end());
      } else {
        kids.push_back(std::move(r));
      }
    };
    attach(sub.left(), offset);
    attach(sub.right(), label);
    return SchroederTree::node(std::move(kids));
  };
  return build(build, t, 0);
}

std::vector<SchroederTree> two_node_contractions(const SchroederTree& f) {
  const std::size_t e = f.internal_edge_count();
  std::vector<SchroederTree> out;
  for (std::size_t keep = 0; keep < e; ++keep) {
    std::vector<bool> merge(e, true);
    merge[keep] = false;
    out.push_back(contract(f, merge));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SchroederTree> proper_contractions(const SchroederTree& f) {
  const std::size_t e = f.internal_edge_count();
  if (e >= 8 * sizeof(std::size_t) - 1) throw std::invalid_argument("proper_contractions: tree too large");
  std::vector<SchroederTree> out;
  if (f.is_leaf()) return out;
  const std::size_t full = (std::size_t{1} << e) - 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    std::vector<bool> merge(e);
    for (std::size_t i = 0; i < e; ++i) merge[i] = mask >> i & 1;
    out.push_back(contract(f, merge));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const SchroederTree& f) {
  if (f.is_leaf()) return {};
  std::string out = "(";
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    if (i) out.push_back(',');
    out += to_string(f.children()[i]);
  }
  out.push_back(')');
  return out;
}

SchroederTree parse_schroeder_tree(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument("malformed Schröder tree at offset " + std::to_string(pos) + ": " + why);
  };
  auto parse = [&](auto&& self) -> SchroederTree {
    if (pos >= text.size() || text[pos] != '(') return SchroederTree();
    ++pos;
    std::vector<SchroederTree> kids{self(self)};
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      kids.push_back(self(self));
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ',' or ')'");
    ++pos;
    if (kids.size() < 2) fail("node with fewer than two children");
    return SchroederTree::node(std::move(kids));
  };
  SchroederTree f = parse(parse);
  if (pos != text.size()) fail("trailing characters");
  return f;
}

std::vector<SchroederTree> all_schroeder_trees(std::size_t leaves) {
  if (leaves == 0) throw std::invalid_argument("all_schroeder_trees: at least one leaf");
  std::map<std::size_t, std::vector<SchroederTree>> memo;
  memo[1] = {SchroederTree()};
  auto get = [&](auto&& self, std::size_t m) -> const std::vector<SchroederTree>& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::vector<SchroederTree> result;
    // Sequences of children with total leaf count m, at least two children.
    std::vector<SchroederTree> prefix;
    auto extend = [&](auto&& ext, std::size_t remaining) -> void {
      if (remaining == 0) {
        if (prefix.size() >= 2) result.push_back(SchroederTree::node(prefix));
        return;
      }
      for (std::size_t first = 1; first <= remaining; ++first) {
        if (prefix.empty() && first == m) continue;
        const auto options = self(self, first);
        for (const auto& c : options) {
          prefix.push_back(c);
          ext(ext, remaining - first);
          prefix.pop_back();
        }
      }
    };
    extend(extend, m);
    std::sort(result.begin(), result.end());
    return memo[m] = std::move(result);
  };
  return get(get, leaves);
}

}  // namespace tamari
