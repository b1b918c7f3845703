#include "tamari/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamari {

bool is_dyck_path(const LatticePath& p) {
  int height = 0;
  for (char c : p.steps) {
    if (c == 'U') ++height;
    else if (c == 'D') --height;
    else return false;
    if (height < 0) return false;
  }
  return height == 0;
}

bool is_m_path(const LatticePath& p, int m) {
  if (m < 1) return false;
  long north = 0, east = 0;
  for (char c : p.steps) {
    if (c == 'N') ++north;
    else if (c == 'E') ++east;
    else return false;
    if (east > m * north) return false;
  }
  return east == m * north;
}

LatticePath tree_to_dyck(const BinaryTree& t) {
  LatticePath p;
  p.steps.reserve(2 * t.size());
  auto visit = [&](auto&& self, const BinaryTree& sub) -> void {
    if (sub.empty()) return;
    self(self, sub.left());
    p.steps.push_back('U');
    self(self, sub.right());
    p.steps.push_back('D');
  };
  visit(visit, t);
  return p;
}

BinaryTree dyck_to_tree(const LatticePath& p) {
  if (!is_dyck_path(p)) throw std::invalid_argument("dyck_to_tree: not a Dyck path: " + p.steps);
  // The last primitive factor U X D is the root: everything before it is
  // the left subtree, X is the right subtree.
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> BinaryTree {
    if (lo == hi) return BinaryTree();
    std::size_t start = lo;
    int height = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (height == 0) start = i;
      height += p.steps[i] == 'U' ? 1 : -1;
    }
    return BinaryTree::node(self(self, lo, start), self(self, start + 1, hi - 1));
  };
  return build(build, 0, p.steps.size());
}

int valleys(const LatticePath& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) count += p.steps[i] == 'D' && p.steps[i + 1] == 'U';
  return count;
}

int double_falls(const LatticePath& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) count += p.steps[i] == 'D' && p.steps[i + 1] == 'D';
  return count;
}

int contacts(const LatticePath& p) {
  int height = 0, count = 0;
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
    height += p.steps[i] == 'U' ? 1 : -1;
    count += height == 0;
  }
  return count;
}

namespace {

// Exchange the step at i with the shortest factor starting at i+1 in which
// the number of `down` steps is `m` times the number of `up` steps.
std::vector<LatticePath> exchange_covers(const LatticePath& p, char up, char down, int m) {
  std::vector<LatticePath> out;
  const std::string& s = p.steps;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != down || s[i + 1] != up) continue;
    long balance = 0;
    std::size_t j = i + 1;
    for (; j < s.size(); ++j) {
      balance += s[j] == up ? m : -1;
      if (balance == 0) break;
    }
    if (j == s.size()) throw std::logic_error("exchange_covers: unbalanced path " + s);
    std::string next = s.substr(0, i) + s.substr(i + 1, j - i) + down + s.substr(j + 1);
    out.push_back(LatticePath{std::move(next)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LatticePath> dyck_rotations_up(const LatticePath& p) {
  if (!is_dyck_path(p)) throw std::invalid_argument("dyck_rotations_up: not a Dyck path");
  return exchange_covers(p, 'U', 'D', 1);
}

std::vector<LatticePath> m_tamari_elements(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("m_tamari_elements: need m >= 1 and n >= 0");
  std::vector<LatticePath> out;
  std::string cur;
  auto extend = [&](auto&& self, int north, int east) -> void {
    if (north == n && east == m * n) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (east < m * north) {
      cur.push_back('E');
      self(self, north, east + 1);
      cur.pop_back();
    }
    if (north < n) {
      cur.push_back('N');
      self(self, north + 1, east);
      cur.pop_back();
    }
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ExactInt fuss_catalan(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("fuss_catalan: need m >= 1 and n >= 0");
  return exact_div(binomial(static_cast<std::int64_t>(m + 1) * n, n), ExactInt(m) * n + 1, "fuss_catalan");
}

std::vector<LatticePath> m_tamari_covers(const LatticePath& p, int m) {
  if (!is_m_path(p, m)) throw std::invalid_argument("m_tamari_covers: not an m-path: " + p.steps);
  return exchange_covers(p, 'N', 'E', m);
}

MTamariIndex::MTamariIndex(int m, int n, Budget* budget) : m_(m), n_(n) {
  const ExactInt expected = fuss_catalan(m, n);
  if (budget) {
    if (expected > budget->limit) throw BudgetExceeded("m-Tamari lattice larger than the budget");
    budget->charge(static_cast<std::uint64_t>(expected), "m-Tamari elements");
  }
  elements_ = m_tamari_elements(m, n);
  std::unordered_map<std::string, std::uint32_t> ids;
  for (std::size_t i = 0; i < elements_.size(); ++i) ids.emplace(elements_[i].steps, static_cast<std::uint32_t>(i));
  up_.resize(elements_.size());
  down_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& c : m_tamari_covers(elements_[i], m)) {
      const std::uint32_t j = ids.at(c.steps);
      up_[i].push_back(j);
      down_[j].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

ExactInt m_tamari_interval_count(int m, int n, Budget& budget) {
  const MTamariIndex index(m, n, &budget);
  std::uint64_t count = 0;
  for_each_interval_in(index.down_lists(), budget, [&](std::uint32_t, std::uint32_t) { ++count; });
  return count;
}

std::vector<ExactInt> m_tamari_interval_stats(int m, int n, Budget& budget) {
  const MTamariIndex index(m, n, &budget);
  std::vector<std::uint64_t> hist(std::max(1, m * n), 0);
  for_each_interval_in(index.down_lists(), budget,
                       [&](std::uint32_t s, std::uint32_t t) { ++hist.at(index.des(s) + index.asc(t)); });
  return {hist.begin(), hist.end()};
}

}  // namespace tamari
