#pragma once

// Exhaustive generation of trees and Tamari intervals, and the statistic
// histograms collected over them.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/exact.hpp"

namespace tamari {

/// Upper bound on the number of elements an exhaustive routine may visit.
/// Exceeding it raises BudgetExceeded instead of running unbounded.
struct Budget {
  std::uint64_t limit = default_limit();
  std::uint64_t used = 0;

  void charge(std::uint64_t count, const char* what);
  /// 200 million, or the value of TAMARI_BUDGET when set.
  static std::uint64_t default_limit();
  static Budget unlimited() { return Budget{UINT64_MAX, 0}; }
};

/// All Catalan(n) trees with n nodes, sorted in the canonical order.
std::vector<BinaryTree> all_trees(std::size_t n);

std::uint64_t catalan(std::size_t n);

/// Trees of one size with their covers and per-tree statistics, addressed
/// by position in all_trees(n).
class TreeIndex {
 public:
  explicit TreeIndex(std::size_t n, Budget* budget = nullptr);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const BinaryTree& tree(std::size_t id) const { return trees_[id]; }
  std::size_t id(const BinaryTree& t) const;

  const std::vector<std::uint32_t>& up(std::size_t id) const { return up_[id]; }
  const std::vector<std::uint32_t>& down(std::size_t id) const { return down_[id]; }
  int des(std::size_t id) const { return des_[id]; }
  int asc(std::size_t id) const { return asc_[id]; }
  int ell(std::size_t id) const { return ell_[id]; }
  /// Bit j set iff canopy entry j is Plus.
  std::uint32_t canopy_bits(std::size_t id) const { return canopy_[id]; }
  const std::vector<std::vector<std::uint32_t>>& down_lists() const noexcept { return down_; }

 private:
  std::size_t n_;
  std::vector<BinaryTree> trees_;
  std::unordered_map<BinaryTree, std::uint32_t> ids_;
  std::vector<std::vector<std::uint32_t>> up_, down_;
  std::vector<int> des_, asc_, ell_;
  std::vector<std::uint32_t> canopy_;
};

using CoverLists = std::vector<std::vector<std::uint32_t>>;

/// Visit every pair s <= t of a finite poset given by its lower covers,
/// grouped by t. Only upper elements with t % stride == offset are visited.
void for_each_interval_in(const CoverLists& down, Budget& budget,
                          const std::function<void(std::uint32_t s, std::uint32_t t)>& visit,
                          std::size_t stride = 1, std::size_t offset = 0);

/// Visit every interval (s, t) of Tam(n) exactly once, grouped by upper
/// tree t. Lower trees are found by backward search along lower covers.
/// If `stride` > 1 only upper trees with id % stride == offset are visited.
void for_each_interval(const TreeIndex& index, Budget& budget,
                       const std::function<void(std::uint32_t s, std::uint32_t t)>& visit,
                       std::size_t stride = 1, std::size_t offset = 0);

/// Histogram from statistic tuples to exact counts. Keys have a fixed arity
/// given by the axis names.
class StatTable {
 public:
  StatTable() = default;
  explicit StatTable(std::vector<std::string> axes) : axes_(std::move(axes)) {}

  const std::vector<std::string>& axes() const noexcept { return axes_; }
  void add(const std::vector<int>& key, const ExactInt& count = 1);
  ExactInt get(const std::vector<int>& key) const;
  ExactInt total() const;
  const std::map<std::vector<int>, ExactInt>& cells() const noexcept { return cells_; }
  /// Cellwise sum; axes must agree.
  void merge(const StatTable& other);
  /// Sum out every axis except `axis`.
  StatTable marginal(std::size_t axis) const;

  /// {"axes": [...], "cells": [{"key": [...], "count": "..."}]}
  std::string to_json() const;

  friend bool operator==(const StatTable&, const StatTable&) = default;

 private:
  std::vector<std::string> axes_;
  std::map<std::vector<int>, ExactInt> cells_;
};

/// Number of intervals of Tam(n).
ExactInt count_intervals(std::size_t n, Budget& budget);

/// Histogram of des(s) + asc(t) over the intervals of Tam(n), as a vector
/// indexed by k = 0..n-1.
std::vector<ExactInt> interval_histogram(std::size_t n, Budget& budget, std::size_t jobs = 1);

/// Histograms over the intervals (s, t) of Tam(n):
///  - by_ell_k: (ell(s), des(s) + asc(t));
///  - by_des_asc: (des(s), asc(t));
///  - indecomposable: (ell(s), des(s) + asc(t)) restricted to ell(t) = 0;
///  - canopy: numbers of canopy positions where s and t read (-, -),
///    (+, +) and (-, +).
struct RefinedStats {
  StatTable by_ell_k{{"ell", "k"}};
  StatTable by_des_asc{{"p", "q"}};
  StatTable indecomposable{{"ell", "k"}};
  StatTable canopy{{"minus", "plus", "mixed"}};
};
RefinedStats interval_stats_refined(std::size_t n, Budget& budget);

}  // namespace tamari
