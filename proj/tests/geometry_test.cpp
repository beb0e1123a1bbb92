#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace tercert::testing {
namespace {

TEST(MonomialOrder, LexDescendingAndIndexed) {
  const auto m2 = monomial_order(2);
  const std::vector<Monomial> expected = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  EXPECT_EQ(m2, expected);
  for (unsigned t = 0; t <= 9; ++t) {
    const auto order = monomial_order(t);
    ASSERT_EQ(order.size(), monomial_count(t));
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(monomial_index(order[i]), i);
  }
  EXPECT_EQ(multinomial({2, 1, 1}), 12u);
}

TEST(ProjectivePoint, CanonicalForm) {
  const auto p = qp(0, 3, -6);
  EXPECT_EQ(p.str(), "(0:1:-2)");
  EXPECT_EQ(p, qp(0, -1, 2));
  EXPECT_THROW(qp(0, 0, 0), InputError);
  std::mt19937_64 gen(1);
  for (const auto& x : random_points(gen, 50)) {
    EXPECT_EQ(QPoint(Q{}, x.coords()), x);
    auto scaled = x.coords();
    for (auto& c : scaled) c *= Rational::parse("-7/3");
    EXPECT_EQ(QPoint(Q{}, scaled), x);
  }
}

TEST(EvalMonomials, SpecExamples) {
  EXPECT_EQ(eval_monomials(Q{}, qp(1, 0, 0), 2), qv({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(eval_monomials(Q{}, qp(1, 1, 0), 2), qv({1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(eval_monomials(Q{}, qp(1, 2, 3), 1), qv({1, 2, 3}));
  EXPECT_EQ(eval_monomials(Q{}, qp(1, 2, 3), 0), qv({1}));
}

TEST(PowerCoeffs, SpecExamples) {
  auto e = qv({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(power_coeffs(Q{}, qp(1, 0, 0), 3), e);
  EXPECT_EQ(power_coeffs(Q{}, qp(1, 1, 0), 2), qv({1, 2, 0, 1, 0, 0}));
  EXPECT_EQ(power_coeffs(Q{}, qp(1, -1, 0), 2), qv({1, -2, 0, 1, 0, 0}));
  // (X + 2Y + 3Z)^2 = X^2 + 4XY + 6XZ + 4Y^2 + 12YZ + 9Z^2
  EXPECT_EQ(power_coeffs(Q{}, qp(1, 2, 3), 2), qv({1, 4, 6, 4, 12, 9}));
}

TEST(EvaluationMatrix, SpecExamples) {
  const auto line = evaluation_matrix(Q{}, QPoints{qp(1, 0, 0), qp(0, 1, 0), qp(1, 1, 0)}, 1);
  EXPECT_EQ(gauss_rank(to_mpq(line)), 2u);
  EXPECT_EQ(rank(line), 2u);
  const auto single = evaluation_matrix(Q{}, QPoints{qp(4, 5, 6)}, 0);
  EXPECT_EQ(single, qmat(1, 1, {1}));
  const QPoints six = {qp(1, 0, 0), qp(0, 1, 0), qp(0, 0, 1), qp(1, 1, 1), qp(1, 2, 3), qp(2, -1, 5)};
  const auto m6 = evaluation_matrix(Q{}, six, 2);
  ASSERT_NE(cofactor_det(to_mpq(m6)), 0);
  EXPECT_EQ(rank(m6), 6u);
  EXPECT_THROW(evaluation_matrix(Q{}, QPoints{qp(1, 2, 3), qp(2, 4, 6)}, 1), InputError);
}

TEST(Synthesize, SpecExamples) {
  const auto a = synthesize(unit_decomposition(Q{}, 2, QPoints{qp(1, 0, 0), qp(0, 1, 0)}));
  EXPECT_EQ(a.coeffs(), qv({1, 0, 0, 1, 0, 0}));
  const Decomposition<Q> half(Q{}, 2, {{qp(1, 1, 0), Rational::parse("1/2")}, {qp(1, -1, 0), Rational::parse("1/2")}});
  EXPECT_EQ(synthesize(half).coeffs(), qv({1, 0, 0, 1, 0, 0}));
  EXPECT_THROW(Decomposition<Q>(Q{}, 2, {{qp(1, 0, 0), Rational(1)}, {qp(2, 0, 0), Rational(1)}}), InputError);
  EXPECT_THROW(Decomposition<Q>(Q{}, 2, {{qp(1, 0, 0), Rational(0)}}), InputError);
  EXPECT_THROW(Decomposition<Q>(Q{}, 2, {}), InputError);
}

TEST(Synthesize, CancellingTermsAreDegenerate) {
  // (X + Y) - X - Y = 0
  const Decomposition<Q> dec(Q{}, 1, {{qp(1, 1, 0), Rational(1)}, {qp(1, 0, 0), Rational(-1)}, {qp(0, 1, 0), Rational(-1)}});
  EXPECT_THROW(synthesize(dec), DegenerateDecompositionError);
}

TEST(VerifyDecomposition, SpecExamples) {
  const TernaryForm<Q> f(Q{}, 2, qv({1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(verify_decomposition(f, unit_decomposition(Q{}, 2, QPoints{qp(1, 1, 0), qp(1, -1, 0)})), Rational(2));
  EXPECT_EQ(verify_decomposition(f, unit_decomposition(Q{}, 2, QPoints{qp(1, 0, 0), qp(0, 1, 0)})), Rational(1));
  const TernaryForm<Q> x2(Q{}, 2, qv({1, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(verify_decomposition(x2, unit_decomposition(Q{}, 2, QPoints{qp(0, 1, 0)})).has_value());
  EXPECT_THROW(verify_decomposition(f, unit_decomposition(Q{}, 3, QPoints{qp(0, 1, 0)})), InputError);
}

TEST(TernaryForm, RejectsZeroAndBadLength) {
  EXPECT_THROW(TernaryForm<Q>(Q{}, 2, qv({0, 0, 0, 0, 0, 0})), InputError);
  EXPECT_THROW(TernaryForm<Q>(Q{}, 2, qv({1, 0, 0})), InputError);
  EXPECT_THROW(TernaryForm<Q>(Q{}, 0, qv({1})), InputError);
}

TEST(Catalecticant, SpecExamples) {
  for (unsigned d = 2; d <= 7; ++d) {
    Vec<Q> c(monomial_count(d), Rational(0));
    c[0] = Rational(1);
    const TernaryForm<Q> xd(Q{}, d, c);
    for (unsigned a = 1; a < d; ++a) EXPECT_EQ(rank(catalecticant(xd, a)), 1u);
  }
  Vec<Q> quartic(15, Rational(0));
  quartic[monomial_index({4, 0, 0})] = Rational(1);
  quartic[monomial_index({0, 4, 0})] = Rational(1);
  quartic[monomial_index({0, 0, 4})] = Rational(1);
  const auto cat4 = catalecticant(TernaryForm<Q>(Q{}, 4, quartic), 2);
  EXPECT_EQ(gauss_rank(to_mpq(cat4)), 3u);
  EXPECT_EQ(rank(cat4), 3u);
  const TernaryForm<Q> x2y2(Q{}, 2, qv({1, 0, 0, 1, 0, 0}));
  const auto cat2 = catalecticant(x2y2, 1);
  EXPECT_EQ(cat2, qmat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(rank(cat2), 2u);
  EXPECT_THROW(catalecticant(x2y2, 0), InputError);
  EXPECT_THROW(catalecticant(x2y2, 2), InputError);
}

TEST(Catalecticant, SmallCharacteristicRejected) {
  const PrimeField f3(3);
  Vec<PrimeField> c(monomial_count(4), f3.zero());
  c[0] = f3.one();
  EXPECT_THROW(catalecticant(TernaryForm<PrimeField>(f3, 4, c), 2), InputError);
}

TEST(Properties, PowerRowsAndEvaluationRowsHaveEqualRank) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = random_points(gen, 1 + trial % 12, 4);
    const unsigned t = trial % 5;
    EXPECT_EQ(rank(veronese_matrix(Q{}, pts, t)), rank(evaluation_matrix(Q{}, pts, t)));
  }
}

TEST(Properties, CatalecticantFactorsThroughEvaluationMatrices) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> lam(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned d = 2 + trial % 6;
    const std::size_t k = 1 + trial % 9;
    const auto pts = random_points(gen, k, 3);
    std::vector<Term<Q>> terms;
    for (const auto& p : pts) {
      int l = 0;
      while (l == 0) l = lam(gen);
      terms.push_back({p, Rational(l)});
    }
    const Decomposition<Q> dec(Q{}, d, terms);
    TernaryForm<Q> f = [&] {
      try {
        return synthesize(dec);
      } catch (const DegenerateDecompositionError&) {
        return TernaryForm<Q>(Q{}, d, power_coeffs(Q{}, pts[0], d));
      }
    }();
    if (verify_decomposition(f, dec) == std::nullopt) continue;
    for (unsigned a = 1; a < d; ++a) {
      const auto cat = catalecticant(f, a);
      // cat = E_a^T diag(lambda) E_{d-a}
      const auto ea = evaluation_matrix(Q{}, pts, a), eb = evaluation_matrix(Q{}, pts, d - a);
      for (std::size_t i = 0; i < cat.rows(); ++i)
        for (std::size_t j = 0; j < cat.cols(); ++j) {
          Rational acc(0);
          for (std::size_t s = 0; s < k; ++s) acc += ea(s, i) * terms[s].lambda * eb(s, j);
          ASSERT_EQ(cat(i, j), acc);
        }
      const std::size_t r = rank(cat);
      EXPECT_LE(r, k);
      EXPECT_EQ(r == k, rank(ea) == k && rank(eb) == k);
    }
  }
}

}  // namespace
}  // namespace tercert::testing
