#include <gtest/gtest.h>

#include <map>
#include <set>

#include "tamari/lattice_path.hpp"

using namespace tamari;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> values) {
  std::vector<ExactInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::vector<ExactInt> trimmed(std::vector<ExactInt> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

LatticePath as_north_east(const LatticePath& dyck) {
  LatticePath out = dyck;
  for (char& c : out.steps) c = c == 'U' ? 'N' : 'E';
  return out;
}

}  // namespace

TEST(DyckPaths, Examples) {
  EXPECT_EQ(tree_to_dyck(BinaryTree::single()).steps, "UD");
  const auto p2 = tree_to_dyck(BinaryTree::left_comb(2));
  EXPECT_EQ(p2.steps, "UDUD");
  EXPECT_EQ(valleys(p2), 1);
  EXPECT_EQ(double_falls(p2), 0);
  EXPECT_EQ(contacts(p2), 1);
  const auto p3 = tree_to_dyck(BinaryTree::right_comb(3));
  EXPECT_EQ(p3.steps, "UUUDDD");
  EXPECT_EQ(valleys(p3), 0);
  EXPECT_EQ(double_falls(p3), 2);
  EXPECT_EQ(contacts(p3), 0);
  EXPECT_EQ(tree_to_dyck(BinaryTree()).steps, "");
}

TEST(DyckPaths, BijectionAndStatistics) {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<LatticePath> images;
    for (const auto& t : all_trees(n)) {
      const auto p = tree_to_dyck(t);
      ASSERT_TRUE(is_dyck_path(p));
      ASSERT_EQ(p.steps.size(), 2 * n);
      ASSERT_EQ(dyck_to_tree(p), t);
      images.insert(p);
      if (n == 0) continue;
      ASSERT_EQ(valleys(p), asc(t));
      ASSERT_EQ(double_falls(p), des(t));
      ASSERT_EQ(contacts(p), ell(t));
    }
    EXPECT_EQ(images.size(), catalan(n));
  }
  EXPECT_THROW(dyck_to_tree(LatticePath{"DU"}), std::invalid_argument);
}

TEST(DyckPaths, CoversCorrespond) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : all_trees(n)) {
      std::vector<LatticePath> mapped;
      for (const auto& u : rotations_up(t)) mapped.push_back(tree_to_dyck(u));
      std::sort(mapped.begin(), mapped.end());
      ASSERT_EQ(mapped, dyck_rotations_up(tree_to_dyck(t)));
    }
  }
}

TEST(MTamari, ElementCounts) {
  EXPECT_EQ(m_tamari_elements(2, 3).size(), 12u);
  EXPECT_EQ(m_tamari_elements(1, 3).size(), 5u);
  EXPECT_EQ(m_tamari_elements(3, 0).size(), 1u);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const auto elements = m_tamari_elements(m, n);
      ASSERT_EQ(ExactInt(elements.size()), fuss_catalan(m, n));
      for (const auto& p : elements) ASSERT_TRUE(is_m_path(p, m));
    }
  }
  EXPECT_THROW(m_tamari_elements(0, 2), std::invalid_argument);
}

TEST(MTamari, CoversStayInTheLattice) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : m_tamari_elements(m, n)) {
        for (const auto& c : m_tamari_covers(p, m)) ASSERT_TRUE(is_m_path(c, m));
      }
    }
  }
  // The bottom path of Tam(2,2) has a single cover, obtained by moving its second N one step left.
  EXPECT_EQ(m_tamari_covers(LatticePath{"NEENEE"}, 2), std::vector<LatticePath>{LatticePath{"NENEEE"}});
}

TEST(MTamari, MEqualsOneIsTheTamariLattice) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : all_trees(n)) {
      std::vector<LatticePath> mapped;
      for (const auto& u : rotations_up(t)) mapped.push_back(as_north_east(tree_to_dyck(u)));
      std::sort(mapped.begin(), mapped.end());
      ASSERT_EQ(mapped, m_tamari_covers(as_north_east(tree_to_dyck(t)), 1));
    }
  }
  Budget b = Budget::unlimited();
  EXPECT_EQ(m_tamari_interval_count(1, 3, b), 13);
}

TEST(MTamari, IntervalCountsMatchProductFormula) {
  int checked = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1;; ++n) {
      if (fuss_catalan(m, n) > 5000) break;
      Budget b = Budget::unlimited();
      const ExactInt expected = exact_div(
          (m + 1) * binomial(static_cast<std::int64_t>((m + 1) * (m + 1)) * n + m, n - 1),
          ExactInt(n) * (ExactInt(m) * n + 1));
      ASSERT_EQ(m_tamari_interval_count(m, n, b), expected) << "m=" << m << " n=" << n;
      ++checked;
    }
  }
  EXPECT_GE(checked, 30);
  Budget b = Budget::unlimited();
  EXPECT_EQ(m_tamari_interval_count(2, 3, b), 58);
  EXPECT_EQ(m_tamari_interval_count(2, 5, b), 9729);
  EXPECT_EQ(m_tamari_interval_count(3, 4, b), 3685);
}

TEST(MTamari, CoverStatisticTables) {
  const std::map<std::pair<int, int>, std::vector<ExactInt>> table{
      {{1, 4}, ints({1, 12, 33, 22})},
      {{2, 2}, ints({1, 4, 1})},
      {{2, 3}, ints({1, 12, 30, 14, 1})},
      {{2, 4}, ints({1, 24, 150, 306, 189, 32, 1})},
      {{3, 2}, ints({1, 6, 3})},
      {{3, 3}, ints({1, 18, 72, 66, 13})},
      {{3, 4}, ints({1, 36, 351, 1196, 1437, 596, 68})},
      {{4, 2}, ints({1, 8, 6})},
      {{4, 3}, ints({1, 24, 132, 180, 58})},
      {{4, 4}, ints({1, 48, 636, 3036, 5406, 3560, 703})},
      {{5, 3}, ints({1, 30, 210, 380, 170})},
      {{5, 4}, ints({1, 60, 1005, 6170, 14550, 13120, 3685})},
      {{6, 3}, ints({1, 36, 306, 690, 395})},
      {{6, 4}, ints({1, 72, 1458, 10942, 32115, 36760, 13390})},
  };
  for (const auto& [mn, expected] : table) {
    Budget b = Budget::unlimited();
    EXPECT_EQ(trimmed(m_tamari_interval_stats(mn.first, mn.second, b)), expected)
        << "m=" << mn.first << " n=" << mn.second;
  }
}

TEST(MTamari, BudgetIsEnforced) {
  Budget tiny{100, 0};
  EXPECT_THROW(m_tamari_interval_count(2, 5, tiny), BudgetExceeded);
  Budget small{300, 0};
  EXPECT_THROW(m_tamari_interval_count(2, 5, small), BudgetExceeded);
}
