#include "tamari/enumeration.hpp"

#include <bit>
#include <cstdlib>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace tamari {

void Budget::charge(std::uint64_t count, const char* what) {
  used += count;
  if (used > limit) {
    throw BudgetExceeded(std::string(what) + ": budget of " + std::to_string(limit) +
                         " elements exceeded");
  }
}

std::uint64_t Budget::default_limit() {
  if (const char* env = std::getenv("TAMARI_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("TAMARI_BUDGET must be a positive integer");
  }
  return 200'000'000;
}

std::uint64_t catalan(std::size_t n) {
  if (n > 35) throw std::out_of_range("catalan: n too large for 64 bits");
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<BinaryTree> all_trees(std::size_t n) {
  std::vector<std::vector<BinaryTree>> by_size{{BinaryTree()}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<BinaryTree> level;
    for (std::size_t l = 0; l < m; ++l) {
      for (const auto& left : by_size[l]) {
        for (const auto& right : by_size[m - 1 - l]) level.push_back(BinaryTree::node(left, right));
      }
    }
    by_size.push_back(std::move(level));
  }
  return by_size[n];
}

TreeIndex::TreeIndex(std::size_t n, Budget* budget) : n_(n) {
  if (budget) budget->charge(catalan(n), "tree index");
  trees_ = all_trees(n);
  ids_.reserve(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) ids_.emplace(trees_[i], static_cast<std::uint32_t>(i));
  up_.resize(trees_.size());
  down_.resize(trees_.size());
  des_.resize(trees_.size());
  asc_.resize(trees_.size());
  ell_.resize(trees_.size());
  canopy_.resize(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    for (const auto& u : rotations_up(trees_[i])) {
      const std::uint32_t j = ids_.at(u);
      up_[i].push_back(j);
      down_[j].push_back(static_cast<std::uint32_t>(i));
    }
    if (n == 0) continue;
    des_[i] = tamari::des(trees_[i]);
    asc_[i] = tamari::asc(trees_[i]);
    ell_[i] = tamari::ell(trees_[i]);
    const auto can = canopy(trees_[i]);
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < can.size(); ++j) {
      if (can[j] == Sign::Plus) bits |= std::uint32_t{1} << j;
    }
    canopy_[i] = bits;
  }
}

std::size_t TreeIndex::id(const BinaryTree& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) throw std::invalid_argument("tree not in index: " + to_string(t));
  return it->second;
}

void for_each_interval(const TreeIndex& index, Budget& budget,
                       const std::function<void(std::uint32_t, std::uint32_t)>& visit,
                       std::size_t stride, std::size_t offset) {
  for_each_interval_in(index.down_lists(), budget, visit, stride, offset);
}

void for_each_interval_in(const CoverLists& down, Budget& budget,
                          const std::function<void(std::uint32_t, std::uint32_t)>& visit,
                          std::size_t stride, std::size_t offset) {
  const std::size_t count = down.size();
  std::vector<std::uint32_t> stamp(count, UINT32_MAX);
  std::vector<std::uint32_t> stack;
  for (std::size_t t = offset; t < count; t += stride) {
    const auto tid = static_cast<std::uint32_t>(t);
    stack.assign(1, tid);
    stamp[t] = tid;
    std::uint64_t found = 0;
    while (!stack.empty()) {
      const std::uint32_t s = stack.back();
      stack.pop_back();
      ++found;
      visit(s, tid);
      for (std::uint32_t d : down[s]) {
        if (stamp[d] != tid) {
          stamp[d] = tid;
          stack.push_back(d);
        }
      }
    }
    budget.charge(found, "interval enumeration");
  }
}

void StatTable::add(const std::vector<int>& key, const ExactInt& count) {
  if (!axes_.empty() && key.size() != axes_.size()) throw std::invalid_argument("StatTable: key arity mismatch");
  cells_[key] += count;
}

ExactInt StatTable::get(const std::vector<int>& key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? ExactInt(0) : it->second;
}

ExactInt StatTable::total() const {
  ExactInt sum = 0;
  for (const auto& [key, count] : cells_) sum += count;
  return sum;
}

void StatTable::merge(const StatTable& other) {
  if (axes_.empty()) axes_ = other.axes_;
  if (!other.cells_.empty() && axes_ != other.axes_) throw std::invalid_argument("StatTable: merging different axes");
  for (const auto& [key, count] : other.cells_) cells_[key] += count;
}

StatTable StatTable::marginal(std::size_t axis) const {
  if (axis >= axes_.size()) throw std::out_of_range("StatTable::marginal: no such axis");
  StatTable out({axes_[axis]});
  for (const auto& [key, count] : cells_) out.add({key[axis]}, count);
  return out;
}

std::string StatTable::to_json() const {
  nlohmann::ordered_json j;
  j["axes"] = axes_;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& [key, count] : cells_) {
    nlohmann::ordered_json cell;
    cell["key"] = key;
    cell["count"] = to_decimal(count);
    j["cells"].push_back(std::move(cell));
  }
  return j.dump();
}

ExactInt count_intervals(std::size_t n, Budget& budget) {
  if (n == 0) return 1;
  TreeIndex index(n, &budget);
  std::uint64_t count = 0;
  for_each_interval(index, budget, [&](std::uint32_t, std::uint32_t) { ++count; });
  return count;
}

std::vector<ExactInt> interval_histogram(std::size_t n, Budget& budget, std::size_t jobs) {
  if (n == 0) throw std::invalid_argument("interval_histogram: n must be positive");
  TreeIndex index(n, &budget);
  if (jobs == 0) jobs = 1;
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(n, 0));
  std::vector<std::uint64_t> used(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](std::size_t w) {
    try {
      Budget local{budget.limit, budget.used};
      for_each_interval(
          index, local,
          [&](std::uint32_t s, std::uint32_t t) { ++partial[w][index.des(s) + index.asc(t)]; }, jobs, w);
      used[w] = local.used - budget.used;
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::uint64_t total_used = 0;
  for (auto u : used) total_used += u;
  budget.charge(total_used, "interval enumeration");
  std::vector<ExactInt> out(n, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < n; ++k) out[k] += p[k];
  }
  return out;
}

RefinedStats interval_stats_refined(std::size_t n, Budget& budget) {
  if (n == 0) throw std::invalid_argument("interval_stats_refined: n must be positive");
  TreeIndex index(n, &budget);
  std::map<std::pair<int, int>, std::uint64_t> ell_k, des_asc, indecomposable;
  std::map<std::vector<int>, std::uint64_t> canopy;
  const std::uint32_t positions = n > 1 ? (1u << (n - 1)) - 1 : 0;
  for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) {
    const int k = index.des(s) + index.asc(t);
    ++ell_k[{index.ell(s), k}];
    ++des_asc[{index.des(s), index.asc(t)}];
    if (index.ell(t) == 0) ++indecomposable[{index.ell(s), k}];
    const std::uint32_t cs = index.canopy_bits(s), ct = index.canopy_bits(t);
    ++canopy[{std::popcount(~cs & ~ct & positions), std::popcount(cs & ct), std::popcount(~cs & ct & positions)}];
  });
  RefinedStats out;
  for (const auto& [key, c] : ell_k) out.by_ell_k.add({key.first, key.second}, c);
  for (const auto& [key, c] : des_asc) out.by_des_asc.add({key.first, key.second}, c);
  for (const auto& [key, c] : indecomposable) out.indecomposable.add({key.first, key.second}, c);
  for (const auto& [key, c] : canopy) out.canopy.add(key, c);
  return out;
}

}  // namespace tamari
