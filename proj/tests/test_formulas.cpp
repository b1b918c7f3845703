#include <gtest/gtest.h>

#include <random>

#include "tamari/enumeration.hpp"
#include "tamari/formulas.hpp"

using namespace tamari;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> values) {
  std::vector<ExactInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

const std::vector<std::vector<ExactInt>>& table_a() {
  static const std::vector<std::vector<ExactInt>> rows{
      ints({1}),
      ints({1, 2}),
      ints({1, 6, 6}),
      ints({1, 12, 33, 22}),
      ints({1, 20, 105, 182, 91}),
      ints({1, 30, 255, 816, 1020, 408}),
      ints({1, 42, 525, 2660, 5985, 5814, 1938}),
      ints({1, 56, 966, 7084, 24794, 42504, 33649, 9614}),
      ints({1, 72, 1638, 16380, 81900, 215280, 296010, 197340, 49335}),
  };
  return rows;
}

const std::vector<std::vector<ExactInt>>& table_b() {
  static const std::vector<std::vector<ExactInt>> rows{
      ints({1}),
      ints({3, 2}),
      ints({13, 18, 6}),
      ints({68, 144, 99, 22}),
      ints({399, 1140, 1197, 546, 91}),
      ints({2530, 9108, 12903, 8976, 3060, 408}),
      ints({16965, 73710, 131625, 123500, 64125, 17442, 1938}),
      ints({118668, 604128, 1302651, 1540770, 1078539, 446292, 100947, 9614}),
      ints({857956, 5008608, 12660648, 18086640, 15958800, 8898240, 3058770, 592020, 49335}),
  };
  return rows;
}

}  // namespace

TEST(Formulas, ATableValues) {
  for (std::size_t i = 0; i < table_a().size(); ++i) EXPECT_EQ(a_row(i + 1), table_a()[i]) << "n=" << i + 1;
  EXPECT_EQ(a_formula(3, 1), 6);
  EXPECT_EQ(a_formula(9, 8), 49335);
  EXPECT_EQ(a_formula(5, 7), 0);
  EXPECT_EQ(a_formula(5, -1), 0);
  EXPECT_THROW(a_formula(0, 0), std::invalid_argument);
  EXPECT_THROW(a_formula(-3, 1), std::invalid_argument);
}

TEST(Formulas, BTableValues) {
  for (std::size_t i = 0; i < table_b().size(); ++i) EXPECT_EQ(b_row(i + 1), table_b()[i]) << "n=" << i + 1;
  EXPECT_EQ(b_formula(4, 2), 99);
  EXPECT_EQ(b_formula(9, 0), 857956);
  EXPECT_EQ(b_formula(5, 4), 91);
  EXPECT_EQ(b_formula(5, 4), a_formula(5, 4));
  EXPECT_THROW(b_formula(0, 0), std::invalid_argument);
}

TEST(Formulas, MatchEnumeration) {
  for (std::size_t n = 1; n <= 7; ++n) {
    Budget budget;
    EXPECT_EQ(interval_histogram(n, budget), a_row(static_cast<std::int64_t>(n))) << "n=" << n;
  }
}

TEST(Formulas, BinomialTransformAndAlternatingSum) {
  for (std::int64_t n = 1; n <= 9; ++n) {
    ExactInt alternating = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      ASSERT_EQ(b_formula(n, k), b_by_binomial_transform(n, k)) << "n=" << n << " k=" << k;
      alternating += (k % 2 ? -1 : 1) * b_formula(n, k);
    }
    EXPECT_EQ(alternating, 1) << "n=" << n;
  }
}

TEST(Formulas, ExactUpToTwoHundred) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    ExactInt total = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      ASSERT_NO_THROW(total += a_formula(n, k)) << "n=" << n << " k=" << k;
      ASSERT_NO_THROW(b_formula(n, k)) << "n=" << n << " k=" << k;
    }
    if (n % 50 == 0) ASSERT_EQ(total, b_formula(n, 0)) << "n=" << n;
    ASSERT_NO_THROW(synchronized_count_forms(n));
  }
}

TEST(Formulas, SpecializationSuite) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto r = specialization_suite(n);
    EXPECT_TRUE(r.passed()) << r.first_failure;
    EXPECT_GT(r.checks, 0u);
  }
  EXPECT_EQ(a_formula(6, 4), 1020);
  EXPECT_EQ(3 * ExactInt(1020), binomial(18, 4));
  EXPECT_EQ(a_formula(9, 6), binomial(27, 6));
  EXPECT_EQ(a_formula(9, 6), 296010);
  EXPECT_EQ(synchronized_count(6), 408);
  EXPECT_EQ(synchronized_count_forms(7), ints({1938, 1938, 1938}));
}

TEST(Formulas, RefinedAgainstTableAndEnumeration) {
  const std::vector<std::vector<ExactInt>> table{
      ints({1}),
      ints({1, 2}),
      ints({3, 5, 5}),
      ints({13, 20, 21, 14}),
      ints({68, 100, 105, 84, 42}),
      ints({399, 570, 595, 504, 330, 132}),
      ints({2530, 3542, 3675, 3192, 2310, 1287, 429}),
      ints({16965, 23400, 24150, 21252, 16170, 10296, 5005, 1430}),
      ints({118668, 161820, 166257, 147420, 115500, 78936, 45045, 19448, 4862}),
  };
  for (std::int64_t n = 1; n <= 9; ++n) {
    for (std::int64_t i = 0; i < n; ++i) ASSERT_EQ(refined_formula(n, i), table[n - 1][i]) << n << "," << i;
    EXPECT_EQ(refined_formula(n, n), 0);
  }
  EXPECT_EQ(refined_formula(5, 3), 84);
  for (std::size_t n = 1; n <= 7; ++n) {
    Budget budget;
    const auto by_ell = interval_stats_refined(n, budget).by_ell_k.marginal(0);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(by_ell.get({static_cast<int>(i)}), refined_formula(n, i)) << "n=" << n << " ell=" << i;
    }
  }
}

TEST(Formulas, SeparatedAgainstTableAndEnumeration) {
  const std::vector<std::vector<ExactInt>> table{
      ints({1}),
      ints({1, 1}),
      ints({1, 4, 1}),
      ints({1, 10, 10, 1}),
      ints({1, 20, 49, 20, 1}),
      ints({1, 35, 168, 168, 35, 1}),
      ints({1, 56, 462, 900, 462, 56, 1}),
      ints({1, 84, 1092, 3630, 3630, 1092, 84, 1}),
      ints({1, 120, 2310, 12012, 20449, 12012, 2310, 120, 1}),
  };
  for (std::int64_t n = 1; n <= 9; ++n) {
    ExactInt total = 0;
    for (std::int64_t p = 0; p < n; ++p) {
      ASSERT_EQ(separated_formula(n, p), table[n - 1][p]) << n << "," << p;
      total += separated_formula(n, p);
    }
    EXPECT_EQ(total, synchronized_count(n));
  }
  EXPECT_EQ(separated_formula(7, 3), 900);
  for (std::size_t n = 1; n <= 7; ++n) {
    Budget budget;
    const auto stats = interval_stats_refined(n, budget);
    for (std::size_t p = 0; p < n; ++p) {
      const int q = static_cast<int>(n - 1 - p);
      EXPECT_EQ(stats.by_des_asc.get({static_cast<int>(p), q}), separated_formula(n, p)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Formulas, MTamariIntervalFormula) {
  EXPECT_EQ(m_tamari_interval_formula(1, 4), 68);
  EXPECT_EQ(m_tamari_interval_formula(2, 5), 9729);
  EXPECT_EQ(m_tamari_interval_formula(3, 4), 3685);
  for (std::int64_t n = 1; n <= 9; ++n) EXPECT_EQ(m_tamari_interval_formula(1, n), b_formula(n, 0));
  EXPECT_THROW(m_tamari_interval_formula(0, 3), std::invalid_argument);
}

TEST(Formulas, ChuVandermonde) {
  // Direct evaluation of the left side at (4, 1, 9): 10*9 + 5*36*2 + 1*84*3.
  ExactInt lhs = 0;
  for (int l = 1; l <= 3; ++l) lhs += binomial(5, l + 2) * binomial(9, l) * binomial(l, 1);
  EXPECT_EQ(lhs, 702);
  EXPECT_TRUE(chu_vandermonde_check(4, 1, 9));
  EXPECT_TRUE(chu_vandermonde_check(3, 5, 7));
  for (std::int64_t n = 1; n <= 10; ++n) {
    EXPECT_TRUE(chu_vandermonde_check(n, 0, 3 * n));
    // At r = 3n the left side is the binomial transform at k = 0.
    ExactInt sum = 0;
    for (std::int64_t l = 0; l < n; ++l) sum += binomial(n + 1, l + 2) * binomial(3 * n, l);
    EXPECT_EQ(2 * sum, ExactInt(n) * (n + 1) * b_formula(n, 0));
  }
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> pick(0, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = pick(rng), k = pick(rng), r = pick(rng);
    ASSERT_TRUE(chu_vandermonde_check(n, k, r)) << n << "," << k << "," << r;
  }
  // Empty sum against a vanishing right side.
  EXPECT_TRUE(chu_vandermonde_check(3, 3, 5));
}

TEST(Formulas, TwoTermRecurrences) {
  const auto r = two_term_recurrence_check(1, 20);
  EXPECT_TRUE(r.passed()) << r.first_failure;
  EXPECT_EQ(r.checks, 2u * 190u);
  // n = 2, k = 1: 1*3 x_{2,1} = (7-1)(2-1) x_{2,0}.
  EXPECT_EQ(3 * a_formula(2, 1), 6 * a_formula(2, 0));
  // n = 4, k = 2: both sides of the n-relation are 23760.
  EXPECT_EQ(ExactInt(8) * 9 * 10 * 1 * a_formula(4, 2), 23760);
  EXPECT_EQ(ExactInt(12) * 3 * 11 * 10 * a_formula(3, 2), 23760);
}

TEST(Formulas, TelescopedRecurrence) {
  const auto r = telescoped_recurrence_check(1, 12);
  EXPECT_TRUE(r.passed()) << r.first_failure;
  EXPECT_EQ(r.checks, 12u * 6u);
  // The recurrence also holds at n = 0 with a_0 = 0.
  EXPECT_TRUE(telescoped_recurrence_check(0, 0).passed());
  // Perturbing one coefficient breaks it.
  auto etas = telescoped_etas(3);
  const ZPolynomial residual = etas[0] * a_polynomial(3) + etas[1] * a_polynomial(4) + (etas[2] + 1) * a_polynomial(5);
  EXPECT_FALSE(residual.is_zero());
}

TEST(Formulas, ShiftedPolynomials) {
  for (std::int64_t n = 1; n <= 9; ++n) EXPECT_EQ(a_polynomial(n).shift(1), b_polynomial(n)) << "n=" << n;
  EXPECT_EQ(a_polynomial(3).shift(1).to_string(), "13 + 18*z + 6*z^2");
  EXPECT_EQ(a_polynomial(4).degree(), 3);
}

TEST(ZPolynomialTest, Arithmetic) {
  const ZPolynomial z = ZPolynomial::z();
  const ZPolynomial p = (z + 1) * (z - 1);
  EXPECT_EQ(p, z * z - 1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.evaluate(3), 8);
  EXPECT_EQ(p.derivative(), 2 * z);
  EXPECT_EQ(p.shift(1), z * z + 2 * z);
  EXPECT_EQ(p.shift(-1).shift(1), p);
  EXPECT_EQ(p.truncated(1), ZPolynomial(-1));
  EXPECT_EQ(ZPolynomial(Rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ((z * z - 3 * z).to_string(), "-3*z + z^2");
  EXPECT_EQ(ZPolynomial().to_string(), "0");
}
