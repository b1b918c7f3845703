#include <gtest/gtest.h>

#include <set>

#include "tamari/enumeration.hpp"
#include "tamari/schroeder_tree.hpp"

using namespace tamari;

TEST(SchroederTree, SuperCatalanCounts) {
  // Little Schröder numbers by number of leaves.
  const std::vector<std::size_t> expected{1, 1, 3, 11, 45, 197, 903};
  for (std::size_t leaves = 1; leaves <= 7; ++leaves) {
    EXPECT_EQ(all_schroeder_trees(leaves).size(), expected[leaves - 1]) << leaves;
  }
}

TEST(SchroederTree, Dimension) {
  EXPECT_EQ(SchroederTree::corolla(5).dimension(), 3u);
  for (const auto& t : all_trees(4)) {
    const auto f = SchroederTree::from_binary(t);
    EXPECT_EQ(f.dimension(), 0u);
    EXPECT_EQ(f.leaf_count(), 5u);
  }
  for (const auto& f : all_schroeder_trees(6)) {
    EXPECT_EQ(f.internal_edge_count(), f.n() - 1 - f.dimension());
  }
  EXPECT_THROW(SchroederTree::node({SchroederTree()}), std::invalid_argument);
}

TEST(SchroederTree, MinAndMaxTrees) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(min_tree(SchroederTree::corolla(n + 1)), BinaryTree::left_comb(n));
    EXPECT_EQ(max_tree(SchroederTree::corolla(n + 1)), BinaryTree::right_comb(n));
    for (const auto& t : all_trees(n)) {
      const auto f = SchroederTree::from_binary(t);
      ASSERT_EQ(min_tree(f), t);
      ASSERT_EQ(max_tree(f), t);
    }
  }
  for (std::size_t leaves = 2; leaves <= 7; ++leaves) {
    for (const auto& f : all_schroeder_trees(leaves)) {
      const auto lo = min_tree(f);
      const auto hi = max_tree(f);
      ASSERT_EQ(lo.size(), leaves - 1);
      ASSERT_TRUE(tamari_leq(lo, hi));
    }
  }
  EXPECT_EQ(all_schroeder_trees(4).size(), 11u);
}

TEST(SchroederTree, MaxTreeOfDescentContractionIsTheTree) {
  // Contracting right-child edges keeps the maximum; left-child edges keep the minimum.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : all_trees(n)) {
      const LabeledTree lt = label_inorder(t);
      std::vector<int> rights, lefts;
      for (int i = 1; i <= lt.n; ++i) {
        if (lt.parent[i] == 0) continue;
        (i > lt.parent[i] ? rights : lefts).push_back(i);
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << rights.size()); ++mask) {
        std::vector<bool> flags(n + 1, false);
        for (std::size_t i = 0; i < rights.size(); ++i) flags[rights[i]] = mask >> i & 1;
        const auto f = contract_binary(t, flags);
        ASSERT_EQ(max_tree(f), t);
        ASSERT_EQ(f.dimension(), static_cast<std::size_t>(std::popcount(mask)));
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << lefts.size()); ++mask) {
        std::vector<bool> flags(n + 1, false);
        for (std::size_t i = 0; i < lefts.size(); ++i) flags[lefts[i]] = mask >> i & 1;
        ASSERT_EQ(min_tree(contract_binary(t, flags)), t);
      }
    }
  }
}

TEST(SchroederTree, ContractionMergesChildren) {
  const auto f = parse_schroeder_tree("((,),(,,))");
  EXPECT_EQ(to_string(contract(f, {true, false})), "(,,(,,))");
  EXPECT_EQ(to_string(contract(f, {false, true})), "((,),,,)");
  EXPECT_EQ(contract(f, {true, true}), SchroederTree::corolla(5));
  EXPECT_EQ(contract(f, {false, false}), f);
  EXPECT_THROW(contract(f, {true}), std::invalid_argument);
}

TEST(SchroederTree, BinaryContractionAgreesWithGeneralContraction) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_trees(n)) {
      const auto f = SchroederTree::from_binary(t);
      std::set<SchroederTree> by_binary, by_general;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> flags(n + 1, false);
        for (std::size_t i = 1; i <= n; ++i) flags[i] = mask >> (i - 1) & 1;
        by_binary.insert(contract_binary(t, flags));
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << f.internal_edge_count()); ++mask) {
        std::vector<bool> flags(f.internal_edge_count());
        for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = mask >> i & 1;
        by_general.insert(contract(f, flags));
      }
      ASSERT_EQ(by_binary, by_general);
    }
  }
}

TEST(SchroederTree, TwoNodeContractions) {
  EXPECT_TRUE(two_node_contractions(SchroederTree::corolla(4)).empty());
  for (const auto& t : all_trees(3)) {
    const auto c = two_node_contractions(SchroederTree::from_binary(t));
    EXPECT_EQ(c.size(), 2u);
    for (const auto& e : c) EXPECT_EQ(e.internal_count(), 2u);
  }
  for (const auto& f : all_schroeder_trees(6)) {
    const auto c = two_node_contractions(f);
    ASSERT_EQ(c.size(), f.internal_edge_count());
    ASSERT_EQ(std::set<SchroederTree>(c.begin(), c.end()).size(), c.size());
  }
}

TEST(SchroederTree, SerializationRoundTrip) {
  EXPECT_EQ(to_string(SchroederTree::corolla(3)), "(,,)");
  EXPECT_EQ(to_string(SchroederTree()), "");
  for (std::size_t leaves = 1; leaves <= 6; ++leaves) {
    for (const auto& f : all_schroeder_trees(leaves)) ASSERT_EQ(parse_schroeder_tree(to_string(f)), f);
  }
  // A binary tree and its Schröder tree share the same text.
  for (const auto& t : all_trees(4)) EXPECT_EQ(to_string(SchroederTree::from_binary(t)), to_string(t));
  EXPECT_THROW(parse_schroeder_tree("()"), std::invalid_argument);
  EXPECT_THROW(parse_schroeder_tree("(,"), std::invalid_argument);
}
