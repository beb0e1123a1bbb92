#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace tercert::testing {
namespace {

using Sizes = std::vector<std::size_t>;

TEST(AnalyzePair, SumOfTwoSquares) {
  const TernaryForm<Q> f(Q{}, 2, qv({1, 0, 0, 1, 0, 0}));
  const auto dec1 = unit_decomposition(Q{}, 2, QPoints{qp(1, 0, 0), qp(0, 1, 0)});
  const Decomposition<Q> dec2(Q{}, 2, {{qp(1, 1, 0), Rational::parse("1/2")}, {qp(1, -1, 0), Rational::parse("1/2")}});
  const auto a = analyze_pair(f, dec1, dec2);
  EXPECT_EQ(a.w, 4u);
  EXPECT_EQ(a.claim1.h_w_d, 3u);
  EXPECT_TRUE(a.claim1.holds);
  EXPECT_EQ(a.profile.dh, (Sizes{1, 1, 1, 1}));
  EXPECT_EQ(a.u, 0u);
  EXPECT_TRUE(a.initial_segment_ok);
  EXPECT_EQ(a.m, 1u);
  ASSERT_TRUE(a.split.has_value());
  EXPECT_EQ(a.split->curve, qv({0, 0, 1}));
  EXPECT_EQ(a.split->a(), 4u);
  EXPECT_TRUE(a.split->b_points.empty());
  EXPECT_EQ(a.residual_ok, true);
  ASSERT_TRUE(a.final_inequality.has_value());
  EXPECT_EQ(a.final_inequality->lhs, 6);
  EXPECT_EQ(a.final_inequality->rhs, 6);
  EXPECT_TRUE(a.final_inequality->d_le_2m);
  ASSERT_TRUE(a.split_bounds.has_value());
  EXPECT_TRUE(a.split_bounds->a_le_upper);
  EXPECT_TRUE(a.split_bounds->a_ge_lower);
}

TEST(AnalyzePair, Errors) {
  const TernaryForm<Q> f(Q{}, 2, qv({1, 0, 0, 1, 0, 0}));
  const auto dec1 = unit_decomposition(Q{}, 2, QPoints{qp(1, 0, 0), qp(0, 1, 0)});
  const auto swapped = unit_decomposition(Q{}, 2, QPoints{qp(0, 1, 0), qp(1, 0, 0)});
  EXPECT_THROW(analyze_pair(f, dec1, swapped), InputError);
  const auto wrong = unit_decomposition(Q{}, 2, QPoints{qp(1, 1, 0), qp(0, 1, 0)});
  EXPECT_THROW(analyze_pair(f, dec1, wrong), InputError);
  EXPECT_THROW(analyze_pair(f, wrong, dec1), InputError);
}

TEST(Claim1, Examples) {
  EXPECT_TRUE(claim1_check(profile(Q{}, QPoints{qp(1, 0, 0), qp(0, 1, 0), qp(1, 1, 0), qp(1, -1, 0)}), 2));
  const QPoints four = {qp(1, 0, 0), qp(0, 1, 0), qp(0, 0, 1), qp(1, 1, 1)};
  ASSERT_EQ(gauss_rank(to_mpq(evaluation_matrix(Q{}, four, 3))), 4u);
  EXPECT_FALSE(claim1_check(profile(Q{}, four), 3));
  EXPECT_FALSE(claim1_check(profile(Q{}, QPoints{qp(1, 2, 3)}), 1));
}

/// Every pair of distinct decompositions the F_p oracle finds for random forms.
TEST(Properties, Claim1HoldsOnOraclePairs) {
  const PrimeField f5(5);
  std::mt19937_64 gen(31);
  const auto plane = plane_points(5);
  std::uniform_int_distribution<std::size_t> pick(0, plane.size() - 1);
  std::size_t pairs = 0, splits = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned d = 2 + trial % 3;
    const std::size_t k = 2 + trial % 2;
    PointList<PrimeField> pts;
    while (pts.size() < k) {
      const auto& p = plane[pick(gen)];
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const auto dec = unit_decomposition(f5, d, pts);
    TernaryForm<PrimeField> f = [&] {
      try {
        return synthesize(dec);
      } catch (const DegenerateDecompositionError&) {
        return TernaryForm<PrimeField>(f5, d, power_coeffs(f5, pts[0], d));
      }
    }();
    const auto found = all_decompositions(f, k);
    for (std::size_t i = 0; i < found.decompositions.size(); ++i)
      for (std::size_t j = i + 1; j < found.decompositions.size(); ++j) {
        auto as_dec = [&](const FoundDecomposition& fd) {
          std::vector<Term<PrimeField>> terms;
          for (std::size_t s = 0; s < k; ++s) terms.push_back({fd.points[s], fd.lambdas[s]});
          return Decomposition<PrimeField>(f5, d, terms);
        };
        const auto a = analyze_pair(f, as_dec(found.decompositions[i]), as_dec(found.decompositions[j]));
        ++pairs;
        EXPECT_TRUE(a.claim1.holds);
        if (a.split) {
          ++splits;
          EXPECT_TRUE(*a.residual_ok);
          EXPECT_TRUE(a.split->profile_matches);
          EXPECT_TRUE(a.split_bounds->a_le_upper);
          EXPECT_TRUE(a.split_bounds->a_ge_lower);
        }
      }
  }
  EXPECT_GT(pairs, 10u);
  EXPECT_GT(splits, 0u);
}

}  // namespace
}  // namespace tercert::testing
