#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace tercert::testing {
namespace {

using FP = PrimeField;
using FPoint = ProjectivePoint<FP>;

TEST(PlanePoints, Counts) {
  EXPECT_EQ(plane_points(2).size(), 7u);
  EXPECT_EQ(plane_points(3).size(), 13u);
  EXPECT_EQ(plane_points(5).size(), 31u);
  EXPECT_THROW(plane_points(4), InputError);
  EXPECT_THROW(plane_points(1), InputError);
  const auto pts = plane_points(7);
  EXPECT_EQ(pts, sorted_points(pts));
  EXPECT_NO_THROW(require_distinct(pts));
}

TernaryForm<FP> x2_plus_y2(const FP& f) {
  Vec<FP> c(6, f.zero());
  c[0] = f.one();
  c[3] = f.one();
  return TernaryForm<FP>(f, 2, c);
}

TEST(AllDecompositions, SumOfTwoSquaresOverF5) {
  const FP f5(5);
  const auto form = x2_plus_y2(f5);
  const auto r = all_decompositions(form, 2);
  EXPECT_EQ(r.total_subsets, 465u);
  EXPECT_EQ(r.candidates_scanned, 465u);
  EXPECT_FALSE(r.truncated);
  ASSERT_GE(r.decompositions.size(), 2u);
  auto contains = [&](const PointList<FP>& pts, const Vec<FP>& lambdas) {
    for (const auto& d : r.decompositions)
      if (d.points == pts && d.lambdas == lambdas) return true;
    return false;
  };
  EXPECT_TRUE(contains({FPoint(f5, 0, 1, 0), FPoint(f5, 1, 0, 0)}, {f5.one(), f5.one()}));
  // 3((X+Y)^2 + (X-Y)^2) = X^2 + Y^2 mod 5; normalized lambdas are (1, 1).
  EXPECT_TRUE(contains({FPoint(f5, 1, 1, 0), FPoint(f5, 1, 4, 0)}, {f5.one(), f5.one()}));
  for (const auto& d : r.decompositions) {
    std::vector<Term<FP>> terms;
    for (std::size_t i = 0; i < d.points.size(); ++i) terms.push_back({d.points[i], d.lambdas[i]});
    EXPECT_TRUE(verify_decomposition(form, Decomposition<FP>(f5, 2, terms)).has_value());
    EXPECT_TRUE(d.lambdas.front().is_one());
  }
}

TEST(AllDecompositions, PurePowerOverF3) {
  const FP f3(3);
  Vec<FP> c(10, f3.zero());
  c[0] = f3.one();
  const auto r = all_decompositions(TernaryForm<FP>(f3, 3, c), 1);
  ASSERT_EQ(r.decompositions.size(), 1u);
  EXPECT_EQ(r.decompositions[0].points, (PointList<FP>{FPoint(f3, 1, 0, 0)}));
}

TEST(AllDecompositions, RankThreeQuarticHasNoLengthTwo) {
  const FP f7(7);
  const PointList<FP> pts = {FPoint(f7, 1, 0, 0), FPoint(f7, 0, 1, 0), FPoint(f7, 0, 0, 1)};
  const auto form = synthesize(unit_decomposition(f7, 4, pts));
  ASSERT_EQ(rank(catalecticant(form, 2)), 3u);
  const auto r = all_decompositions(form, 2);
  EXPECT_TRUE(r.decompositions.empty());
  EXPECT_EQ(all_decompositions(form, 3).decompositions.size(), 1u);
}

TEST(AllDecompositions, CapTruncatesAndIsMonotone) {
  const FP f5(5);
  const auto form = x2_plus_y2(f5);
  const auto full = all_decompositions(form, 2);
  for (std::uint64_t cap : {0u, 50u, 200u, 464u}) {
    OracleOptions opts;
    opts.cap = cap;
    const auto part = all_decompositions(form, 2, opts);
    EXPECT_TRUE(part.truncated);
    EXPECT_EQ(part.candidates_scanned, cap);
    ASSERT_LE(part.decompositions.size(), full.decompositions.size());
    for (std::size_t i = 0; i < part.decompositions.size(); ++i)
      EXPECT_EQ(part.decompositions[i].points, full.decompositions[i].points);
  }
  EXPECT_THROW(all_decompositions(form, 0), InputError);
}

TEST(Properties, CatalecticantBoundAndParallelDeterminism) {
  const FP f7(7);
  std::mt19937_64 gen(41);
  const auto plane = plane_points(7);
  std::uniform_int_distribution<std::size_t> pick(0, plane.size() - 1);
  for (int trial = 0; trial < 6; ++trial) {
    const unsigned d = 3 + trial % 2;
    PointList<FP> pts;
    while (pts.size() < 3) {
      const auto& p = plane[pick(gen)];
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    TernaryForm<FP> form = [&] {
      try {
        return synthesize(unit_decomposition(f7, d, pts));
      } catch (const DegenerateDecompositionError&) {
        return TernaryForm<FP>(f7, d, power_coeffs(f7, pts[0], d));
      }
    }();
    const std::size_t cat = rank(catalecticant(form, d / 2));
    for (std::size_t k = 1; k <= 2; ++k) {
      OracleOptions par;
      par.workers = 3;
      const auto a = all_decompositions(form, k);
      const auto b = all_decompositions(form, k, par);
      ASSERT_EQ(a.decompositions.size(), b.decompositions.size());
      for (std::size_t i = 0; i < a.decompositions.size(); ++i) {
        EXPECT_EQ(a.decompositions[i].points, b.decompositions[i].points);
        EXPECT_EQ(a.decompositions[i].lambdas, b.decompositions[i].lambdas);
      }
      if (cat > k) {
        EXPECT_TRUE(a.decompositions.empty());
      }
    }
  }
}

}  // namespace
}  // namespace tercert::testing
