#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qpoly/schemes/qpoly.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::schemes;

TEST(SchemeProps, AxiomsAndEigenmatrices) {
  for (const auto& [name, s] : oracle::corpus_schemes(200)) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(verify_scheme(s).valid);
    const auto e = eigendata(s);
    const auto pq = e.P * e.Q;
    for (int i = 0; i <= s.d; ++i)
      for (int j = 0; j <= s.d; ++j) EXPECT_EQ(pq(i, j), i == j ? Real(s.n) : Real(0));
    EXPECT_EQ(e.m[0], Real(1));
    EXPECT_EQ(e.k[0], Real(1));
    for (int j = 0; j <= s.d; ++j)
      for (int i = 0; i <= s.d; ++i) EXPECT_EQ(e.m[j] * e.P(j, i), e.Q(i, j) * e.k[i]);
  }
}

TEST(SchemeProps, KreinMatchesOracle) {
  for (const auto& [name, s] : oracle::corpus_schemes(50)) {
    SCOPED_TRACE(name);
    const auto e = eigendata(s);
    const auto t = krein(e);
    const auto r = check_krein(t);
    EXPECT_TRUE(r.nonnegative);
    EXPECT_TRUE(r.symmetric);
    EXPECT_TRUE(r.identity_row);
    const auto b = oracle::brute_force_krein(s);
    const auto perm = oracle::match_idempotents(b, e);
    const int d = s.d;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        for (int h = 0; h <= d; ++h)
          EXPECT_EQ(b.q[i][j][h], t(perm[i], perm[j], perm[h])) << i << j << h;
  }
}

TEST(SchemeProps, DualEigenvaluesAreB1StarSpectrum) {
  for (const auto& [name, s] : oracle::corpus_schemes(200)) {
    SCOPED_TRACE(name);
    const auto e = eigendata(s);
    for (const auto& qs : find_q_orderings(e, krein(e))) {
      const auto r = b1star_spectrum(qs);
      std::vector<Real> got;
      for (const auto& x : r.eigenvalues) got.push_back(x.value());
      std::vector<Real> want = qs.dual_by_relation;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);

      const auto t = thm41_check(qs);
      EXPECT_TRUE(t.part1.ineq.holds);
      EXPECT_EQ(t.part1.ineq.equality, qs.d() == 2);
      if (t.part2)
        for (const auto& b : t.part2->branches) EXPECT_TRUE(b.ineq.holds);
    }
  }
}

TEST(SchemeProps, DualTightClass3Audit) {
  for (const auto& [name, s] : oracle::corpus_schemes(200)) {
    if (s.d != 3) continue;
    SCOPED_TRACE(name);
    const auto e = eigendata(s);
    const auto structures = find_q_orderings(e, krein(e));
    if (structures.empty()) continue;
    const auto c = thm51_classify(s, structures);
    EXPECT_TRUE(c.consistent);
    EXPECT_EQ(c.dual_tight, c.design.has_value());
    for (const auto& o : c.orderings) {
      if (!o.bound.dual_tight) continue;
      ASSERT_TRUE(o.audit.has_value());
      EXPECT_TRUE(o.audit->all_pass);
      EXPECT_TRUE(o.audit->b2star_is_1);
      EXPECT_TRUE(o.audit->b1star_eq_c2star);
      EXPECT_TRUE(o.audit->q_antipodal);
    }
    for (int i = 1; i <= 3; ++i)
      if (incidence_design(s, i)) EXPECT_TRUE(c.dual_tight) << "relation " << i;
  }
}

}  // namespace
