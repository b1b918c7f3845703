#include <gtest/gtest.h>

#include <set>

#include "tamari/diagonal.hpp"

using namespace tamari;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> values) {
  std::vector<ExactInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

Budget unlimited() { return Budget::unlimited(); }

}  // namespace

TEST(DiagonalFaces, SmallFVectors) {
  Budget b = unlimited();
  EXPECT_EQ(diagonal_fvector_enumerated(1, b), ints({1}));
  EXPECT_EQ(diagonal_fvector_enumerated(2, b), ints({3, 2}));
  EXPECT_EQ(diagonal_fvector_enumerated(3, b), ints({13, 18, 6}));
  EXPECT_EQ(diagonal_fvector(3, b), ints({13, 18, 6}));
  EXPECT_EQ(diagonal_fvector(1, b), ints({1}));
}

TEST(DiagonalFaces, EnumerationMatchesBinomialSumsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Budget b = unlimited();
    EXPECT_EQ(diagonal_fvector_enumerated(n, b), diagonal_fvector(n, b)) << n;
  }
  Budget b = unlimited();
  EXPECT_EQ(diagonal_fvector(6, b), ints({2530, 9108, 12903, 8976, 3060, 408}));
}

TEST(DiagonalFaces, FacesAreExactlyThePairsWithMaxBelowMin) {
  // Brute force over all pairs of Schröder trees.
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto faces = all_schroeder_trees(n + 1);
    std::set<std::pair<SchroederTree, SchroederTree>> expected;
    for (const auto& f : faces) {
      for (const auto& g : faces) {
        if (tamari_leq(max_tree(f), min_tree(g))) expected.emplace(f, g);
      }
    }
    std::set<std::pair<SchroederTree, SchroederTree>> generated;
    std::size_t visits = 0;
    const TreeIndex index(n);
    Budget b = unlimited();
    for_each_diagonal_face(index, b, [&](const DiagonalFace& face, std::uint32_t s, std::uint32_t t) {
      ++visits;
      ASSERT_EQ(max_tree(face.f), index.tree(s));
      ASSERT_EQ(min_tree(face.g), index.tree(t));
      ASSERT_EQ(static_cast<std::size_t>(face.dim), face.f.dimension() + face.g.dimension());
      generated.emplace(face.f, face.g);
    });
    EXPECT_EQ(visits, generated.size());
    EXPECT_EQ(generated, expected) << n;
  }
}

TEST(DiagonalFaces, ByDimensions) {
  Budget b = unlimited();
  const auto n4 = diagonal_fvector_by_dims(4, b);
  EXPECT_EQ(n4.get({1, 1}), 61);
  EXPECT_EQ(n4.get({0, 0}), 68);
  const auto n5 = diagonal_fvector_by_dims(5, b);
  EXPECT_EQ(n5.get({4, 0}), 1);
  EXPECT_EQ(n5.get({1, 2}), 239);
  EXPECT_EQ(n5.get({0, 3}), 34);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(diagonal_fvector_by_dims_enumerated(n, b), diagonal_fvector_by_dims(n, b)) << n;
  }
}

TEST(DiagonalFaces, EulerCharacteristicAndTopEntries) {
  for (std::size_t n = 1; n <= 7; ++n) {
    Budget b = unlimited();
    const auto f = diagonal_fvector(n, b);
    ExactInt alt = 0;
    for (std::size_t k = 0; k < f.size(); ++k) alt += (k % 2 ? -1 : 1) * f[k];
    EXPECT_EQ(alt, 1) << n;
    EXPECT_EQ(f[0], count_intervals(n, b));
    const ExactInt sync = 2 * binomial(3 * n, n) / ((n + 1) * (2 * n + 1));
    EXPECT_EQ(f[n - 1], sync);
  }
}

TEST(EdgeClassification, Examples) {
  const BinaryTree y = BinaryTree::single();
  EXPECT_EQ(classify_edges(y, y), EdgeClassification{});
  EXPECT_THROW(classify_edges(BinaryTree::right_comb(3), BinaryTree::left_comb(3)), std::invalid_argument);
}

TEST(EdgeClassification, BlockMatchingAgreesWithContractions) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const TreeIndex index(n);
    Budget b = unlimited();
    for_each_interval(index, b, [&](std::uint32_t s, std::uint32_t t) {
      ASSERT_EQ(classify_edges(index.tree(s), index.tree(t)),
                classify_edges_by_contraction(index.tree(s), index.tree(t)));
    });
  }
}

TEST(EdgeClassification, CountsAreConsistent) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const TreeIndex index(n);
    Budget b = unlimited();
    for_each_interval(index, b, [&](std::uint32_t s, std::uint32_t t) {
      const auto c = classify_edges(index.tree(s), index.tree(t));
      ASSERT_EQ(c.blocked, 0);
      ASSERT_EQ(c.free + c.tied + 2 * c.constrained, index.des(s) + index.asc(t));
    });
  }
}

TEST(InternalFaces, FormulaValues) {
  Budget b = unlimited();
  EXPECT_EQ(internal_fvector(1, b), ints({1}));
  EXPECT_EQ(internal_fvector(2, b), ints({1, 2}));
  EXPECT_EQ(internal_fvector(3, b), ints({3, 8, 6}));
  EXPECT_EQ(internal_fvector(4, b), ints({12, 42, 51, 22}));
  EXPECT_EQ(internal_fvector(5, b), ints({56, 244, 406, 308, 91}));
  EXPECT_EQ(internal_fvector(6, b), ints({288, 1504, 3171, 3384, 1836, 408}));
  EXPECT_EQ(internal_fvector(7, b), ints({1584, 9648, 24606, 33680, 26145, 10944, 1938}));
}

TEST(InternalFaces, DirectMethodAgreesUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Budget b = unlimited();
    EXPECT_EQ(internal_fvector_direct(n, b), internal_fvector(n, b)) << n;
  }
}

TEST(InternalFaces, FacetCriterionMatchesAllContractions) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const TreeIndex index(n);
    Budget b = unlimited();
    for_each_diagonal_face(index, b, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
      ASSERT_EQ(is_internal(face.f, face.g), is_internal_by_all_contractions(face.f, face.g));
    });
  }
}

TEST(InternalFaces, AllFacetsAreInternal) {
  for (std::size_t n = 1; n <= 7; ++n) {
    Budget b = unlimited();
    EXPECT_EQ(internal_fvector(n, b).back(), diagonal_fvector(n, b).back());
  }
}

TEST(Decompositions, BooleanShape) {
  EXPECT_EQ(boolean_shape(ints({0, 1, 2, 1})), std::make_pair(1, 2));
  EXPECT_EQ(boolean_shape(ints({1})), std::make_pair(0, 0));
  EXPECT_EQ(boolean_shape(ints({1, 3, 1})).first, -1);
  EXPECT_EQ(boolean_shape(ints({0, 0})).first, -1);
}

TEST(Decompositions, MaxMinFibersAreTheDefiningCubes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Budget b = unlimited();
    const auto report = decomposition_report(n, DecompositionMode::MaxMin, b);
    const TreeIndex index(n);
    EXPECT_EQ(report.non_boolean, 0u);
    for (const auto& [key, poly] : report.fibers) {
      EXPECT_EQ(boolean_shape(poly), std::make_pair(0, index.des(key.first) + index.asc(key.second)));
    }
  }
}

TEST(Decompositions, MorseDecompositions) {
  for (auto mode : {DecompositionMode::MinMin, DecompositionMode::MaxMin, DecompositionMode::MaxMax}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      Budget b = unlimited();
      const auto report = decomposition_report(n, mode, b);
      EXPECT_EQ(report.non_boolean, 0u) << to_string(mode) << " n=" << n << " " << report.first_non_boolean;
      EXPECT_EQ(report.fvector, diagonal_fvector(n, b));
    }
  }
  Budget b = unlimited();
  EXPECT_EQ(decomposition_report(3, DecompositionMode::MinMin, b).fvector, ints({13, 18, 6}));
}

TEST(Decompositions, MinMaxHasNonBooleanFiber) {
  Budget b = unlimited();
  const auto report = decomposition_report(3, DecompositionMode::MinMax, b);
  EXPECT_GT(report.non_boolean, 0u);
  EXPECT_FALSE(report.first_non_boolean.empty());
  EXPECT_EQ(report.fvector, ints({13, 18, 6}));
}

TEST(Decompositions, ModeNames) {
  for (auto mode : {DecompositionMode::MinMin, DecompositionMode::MaxMin, DecompositionMode::MinMax,
                    DecompositionMode::MaxMax}) {
    EXPECT_EQ(parse_decomposition_mode(to_string(mode)), mode);
  }
  EXPECT_THROW(parse_decomposition_mode("min"), std::invalid_argument);
}
