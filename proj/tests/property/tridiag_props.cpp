#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpoly/tridiag/system.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::tridiag;

exact::Matrix<Rational> rational_matrix(const Matrix<Real>& m) {
  exact::Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).rational();
  return out;
}

TEST(TridiagProps, RandomSuite) {
  RandomSystems gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + i % 5;
    const auto s = gen.next(d);
    SCOPED_TRACE("system " + std::to_string(i) + " diameter " + std::to_string(d));
    ASSERT_TRUE(validate(s).valid);

    const auto f = f_polynomials(s);
    ASSERT_EQ(f.size(), static_cast<std::size_t>(d + 1));
    EXPECT_EQ(f[static_cast<std::size_t>(d)], oracle::cofactor_charpoly(rational_matrix(reduced_matrix(s))));
    EXPECT_EQ(f[2](Rational(-1)), -s.beta[1].rational());

    const auto r = spectrum(s);
    EXPECT_TRUE(interlacing_check(r).pass);

    const auto p1 = thm1_part1(s, r);
    EXPECT_TRUE(p1.ineq.holds);
    EXPECT_EQ(p1.ineq.equality, d == 2);
    EXPECT_TRUE(p1.consistent);

    if (d < 3) continue;
    const auto p2 = thm1_part2(s, r);
    const int cmp = compare(s.beta[2] + s.gamma[3], s.kappa + Real(1));
    EXPECT_EQ(p2.comparison, cmp);
    ASSERT_EQ(p2.branches.size(), cmp == 0 ? 2u : 1u);
    if (cmp > 0) EXPECT_EQ(p2.branches[0].branch, "ge");
    if (cmp < 0) EXPECT_EQ(p2.branches[0].branch, "le");
    for (const auto& b : p2.branches) {
      EXPECT_TRUE(b.ineq.holds) << b.branch;
      EXPECT_EQ(b.ineq.equality, d == 3) << b.branch;
    }
    EXPECT_TRUE(p2.consistent);
  }
}

TEST(TridiagProps, SeedDeterminesSystems) {
  RandomSystems a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const auto x = a.next(2 + i % 5);
    const auto y = b.next(2 + i % 5);
    EXPECT_EQ(x.kappa, y.kappa);
    EXPECT_EQ(x.beta, y.beta);
    EXPECT_EQ(x.gamma, y.gamma);
  }
}

}  // namespace
