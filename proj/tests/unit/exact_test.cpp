#include <gtest/gtest.h>

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/expr.hpp"
#include "qpoly/exact/number_field.hpp"
#include "qpoly/exact/polynomial.hpp"
#include "qpoly/exact/real.hpp"
#include "qpoly/exact/sturm.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::exact;

AlgebraicReal sqrt_of(long n) { return isolate_real_roots(RationalPoly{Rational(-n), 0, 1}).back(); }

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(RationalPoly({1, 1}) * RationalPoly({-1, 1}), RationalPoly({-1, 0, 1}));
}

TEST(Poly, ZeroAnnihilates) {
  EXPECT_TRUE((RationalPoly({3, 2, 1}) * RationalPoly()).is_zero());
  EXPECT_EQ(RationalPoly().degree(), -1);
}

TEST(Poly, PentagonRecurrenceStep) {
  // (x - 0)(x + 1) - 1
  const RationalPoly f1{1, 1};
  EXPECT_EQ(RationalPoly::x() * f1 - RationalPoly::constant(1), RationalPoly({-1, 1, 1}));
}

TEST(Poly, TrailingZerosTrimmed) {
  RationalPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(RationalPoly({1, 2, 3}) - RationalPoly({0, 0, 3}), RationalPoly({1, 2}));
}

TEST(Poly, GcdAndSquarefree) {
  const RationalPoly a = RationalPoly::from_roots({1, 1, 2});
  EXPECT_EQ(squarefree_part(a).monic(), RationalPoly::from_roots({1, 2}));
  EXPECT_EQ(gcd(a, RationalPoly::from_roots({1, 3})).monic(), RationalPoly::from_roots({1}));
}

TEST(Sturm, SqrtTwoChain) {
  const auto chain = sturm_chain(RationalPoly{-2, 0, 1});
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[1], RationalPoly({0, 2}));
  EXPECT_EQ(chain[2].degree(), 0);
  EXPECT_GT(chain[2].coeff(0), 0);
  EXPECT_EQ(sign_variations(chain, -2) - sign_variations(chain, 2), 2);
}

TEST(Sturm, LinearChain) {
  const auto chain = sturm_chain(RationalPoly{1, 1});
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[1].degree(), 0);
}

TEST(Sturm, NoRealRoots) {
  SturmSequence s(RationalPoly{1, 0, 1});
  EXPECT_EQ(s.count_all(), 0);
  EXPECT_EQ(s.count_half_open(-100, 100), 0);
}

TEST(Sturm, ZeroPolynomialRejected) { EXPECT_THROW(sturm_chain(RationalPoly()), DomainError); }

TEST(Isolate, GoldenRatioRoots) {
  const auto r = isolate_real_roots(RationalPoly{-1, 1, 1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(r[0].lo(), Rational(-1618034, 1000000));
  EXPECT_GT(r[0].hi(), Rational(-1618034, 1000000) - 1);
  const auto fine = r[1].refined_bits(30);
  EXPECT_LT(fine.lo(), Rational(618034, 1000000));
  EXPECT_GT(fine.hi(), Rational(618033, 1000000));
}

TEST(Isolate, RationalRootsExact) {
  const auto r = isolate_real_roots(RationalPoly::from_roots({1, 2, 3}));
  ASSERT_EQ(r.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    ASSERT_TRUE(r[static_cast<std::size_t>(i)].is_rational());
    EXPECT_EQ(r[static_cast<std::size_t>(i)].rational_value(), i + 1);
  }
}

TEST(Isolate, HeawoodF3) {
  // x^3 + 3x^2 - 2x - 6 = (x + 3)(x^2 - 2)
  const auto r = isolate_real_roots(RationalPoly{-6, -2, 3, 1});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(compare(r[0], Rational(-3)), 0);
  EXPECT_EQ(compare(r[1], isolate_real_roots(RationalPoly{-2, 0, 1}).front()), 0);
  EXPECT_EQ(compare(r[2], sqrt_of(2)), 0);
}

TEST(Isolate, MultiplicitiesReported) {
  const auto r = isolate_real_roots_with_multiplicity(RationalPoly::from_roots({2, 2, 2, -1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].multiplicity, 1);
  EXPECT_EQ(r[1].multiplicity, 3);
}

TEST(Compare, SqrtTwoBelowThreeHalves) { EXPECT_LT(compare(sqrt_of(2), Rational(3, 2)), 0); }

TEST(Compare, IndependentIsolationsEqual) {
  const AlgebraicReal a = sqrt_of(2);
  const AlgebraicReal b = isolate_real_roots(RationalPoly{-4, 0, 2}).back();
  const AlgebraicReal c = isolate_real_roots(RationalPoly::from_roots({5}) * RationalPoly{-2, 0, 1})[1];
  EXPECT_EQ(compare(a, b), 0);
  EXPECT_EQ(compare(a, c.refined_bits(3)), 0);
}

TEST(Compare, GoldenAboveMinusOne) {
  const auto r = isolate_real_roots(RationalPoly{-1, 1, 1});
  EXPECT_GT(compare(r[1], AlgebraicReal(Rational(-1))), 0);
}

TEST(SignAt, Examples) {
  EXPECT_EQ(RationalPoly({-1, 1, 1}).sign_at(-1), -1);
  EXPECT_EQ(RationalPoly({-1, 1, 1})(Rational(-1)), -1);
  EXPECT_EQ(RationalPoly({-2, 0, 1}).sign_at(0), -1);
  EXPECT_EQ(RationalPoly({-6, -2, 3, 1})(Rational(-1)), -2);
}

TEST(Real, FieldArithmetic) {
  const Real s2 = Real::from_algebraic(sqrt_of(2));
  EXPECT_EQ(s2 * s2, Real(2));
  EXPECT_EQ((s2 + Real(1)) * (s2 - Real(1)), Real(1));
  EXPECT_TRUE((s2 - s2).is_zero());
  EXPECT_GT(s2, Real(Rational(141, 100)));
  EXPECT_LT(s2, Real(Rational(142, 100)));
}

TEST(Real, CompositumOfIndependentFields) {
  const Real s2 = Real::from_algebraic(sqrt_of(2));
  const Real s3 = Real::from_algebraic(sqrt_of(3));
  const Real s6 = Real::from_algebraic(sqrt_of(6));
  EXPECT_EQ(s2 * s3, s6);
  EXPECT_EQ((s2 + s3) * (s2 + s3), Real(5) + Real(2) * s6);
}

TEST(Real, ToAlgebraicIsCanonical) {
  const Real phi = (Real(1) + Real::from_algebraic(sqrt_of(5))) / Real(2);
  const AlgebraicReal a = phi.to_algebraic();
  EXPECT_EQ(a.poly().primitive(), RationalPoly({-1, -1, 1}));
  EXPECT_EQ(phi.as_rational(), std::nullopt);
  EXPECT_EQ((phi * phi - phi).as_rational(), Rational(1));
}

TEST(Real, CommonFieldRecognisesSharedPolynomial) {
  const auto roots = isolate_real_roots(RationalPoly{-2, 0, 1});
  const auto placed = to_reals(roots);
  EXPECT_EQ(placed[0] + placed[1], Real(0));
  EXPECT_EQ(placed[0].field()->degree(), 2);
}

TEST(Expr, SignDecidedExactly) {
  const Expr s2(sqrt_of(2));
  EXPECT_EQ((s2 * s2 - Expr(Rational(2))).sign(), 0);
  EXPECT_EQ((s2 - Expr(Rational(1414, 1000))).sign(), 1);
  EXPECT_EQ(compare(Expr(Rational(1, 3)), Expr(Rational(1, 3))), 0);
}

TEST(Expr, BudgetExhaustionThrows) {
  set_refinement_budget(1);
  const Real a = Real::from_algebraic(sqrt_of(2)) - Real(Rational(665857, 470832));
  EXPECT_THROW((void)a.sign(), BudgetExceeded);
  set_refinement_budget(-1);
}

}  // namespace
