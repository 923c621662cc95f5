#include <gtest/gtest.h>

#include "qpoly/errors.hpp"
#include "qpoly/scanner/scan.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::scanner;

TEST(Grid, LexicographicOrder) {
  ScanConfig cfg;
  cfg.m_max = 3;
  const auto g = grid(cfg);
  // m = 1: 1 candidate, m = 2: 8, m = 3: 27.
  ASSERT_EQ(g.size(), 36u);
  EXPECT_EQ(g.front().m, 1);
  EXPECT_EQ(g[1].m, 2);
  EXPECT_EQ(g[1].c2, 1);
  EXPECT_EQ(g[2].c2, 2);
  EXPECT_EQ(g.back().b1, 3);
  EXPECT_EQ(g.back().c3, 3);
}

TEST(Grid, RationalStep) {
  ScanConfig cfg;
  cfg.m_min = 1;
  cfg.m_max = 1;
  cfg.step = Rational(1, 2);
  const auto g = grid(cfg);
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(g.front().b1, Rational(1, 2));
}

TEST(Grid, InvalidRejected) {
  ScanConfig cfg;
  cfg.m_min = 5;
  cfg.m_max = 3;
  EXPECT_THROW(grid(cfg), DomainError);
  cfg = {};
  cfg.step = 0;
  EXPECT_THROW(grid(cfg), DomainError);
  cfg = {};
  cfg.m_max = 1000;
  EXPECT_THROW(grid(cfg), DomainError);
}

TEST(Evaluate, NegativeDiagonalRejectedFirst) {
  // a2* = m - b2 - c2 = 4 - 3 - 3 < 0
  const auto r = evaluate({4, 1, 3, 3, 4}, false);
  EXPECT_EQ(r.rejected_at, Filter::condition);
  EXPECT_FALSE(r.thm41.has_value());
}

TEST(Evaluate, DualTightSurvivor) {
  const auto r = evaluate({6, 2, 1, 2, 6}, true);
  ASSERT_TRUE(r.survived());
  EXPECT_EQ(r.m3, 1);
  EXPECT_EQ(r.a_star, (std::vector<Rational>{0, 3, 3, 0}));
  EXPECT_TRUE(r.dual_tight());
  ASSERT_TRUE(r.audit.has_value());
  EXPECT_TRUE(r.audit->all_pass);
  EXPECT_TRUE(r.audit->b2star_is_1);
  EXPECT_TRUE(r.audit->b1star_eq_c2star);
  EXPECT_FALSE(r.alarm);
}

TEST(Evaluate, IntegralityOfM3) {
  // m3 = b1 b2 / c2 = 3 * 1 / 2
  EXPECT_NE(evaluate({6, 3, 1, 2, 6}, false).rejected_at, Filter::multiplicity);
  EXPECT_EQ(evaluate({6, 3, 1, 2, 6}, true).rejected_at, Filter::multiplicity);
}

TEST(Evaluate, KreinFilterCatchesSqueezeFailure) {
  const auto with = evaluate({7, 5, 4, 1, 7}, false, true);
  EXPECT_EQ(with.rejected_at, Filter::krein);
  const auto without = evaluate({7, 5, 4, 1, 7}, false, false);
  ASSERT_TRUE(without.survived());
  EXPECT_TRUE(without.dual_tight());
  ASSERT_TRUE(without.audit.has_value());
  EXPECT_FALSE(without.audit->all_pass);
  EXPECT_FALSE(without.audit->b2star_is_1);
}

TEST(Evaluate, FreeC3ReportsA3) {
  const auto r = evaluate({4, 2, 3, 1, 2}, false);
  EXPECT_EQ(r.a_star[3], 2);
  if (r.dual_tight()) {
    ASSERT_TRUE(r.audit.has_value());
    EXPECT_TRUE(r.audit->a3_finding);
  }
}

TEST(Scan, DefaultGridSmall) {
  ScanConfig cfg;
  cfg.m_max = 6;
  long seen = 0;
  const auto s = scan(cfg, [&](const CandidateResult& r) {
    ++seen;
    if (r.dual_tight()) {
      EXPECT_TRUE(r.audit->b2star_is_1);
      EXPECT_TRUE(r.audit->b1star_eq_c2star);
    }
  });
  EXPECT_EQ(seen, s.candidates);
  long rejected = 0;
  for (long x : s.rejected) rejected += x;
  EXPECT_EQ(rejected + s.survivors, s.candidates);
  EXPECT_EQ(s.alarms, 0);
  EXPECT_EQ(s.dual_tight, s.dual_tight_b2star_is_1);
}

TEST(Scan, Json) {
  const auto r = evaluate({4, 1, 3, 3, 4}, false);
  const auto j = to_json(r);
  EXPECT_EQ(j["rejected_at"], "condition");
  EXPECT_EQ(j["filters"]["condition"], false);
  EXPECT_TRUE(j["filters"]["krein"].is_null());
  EXPECT_EQ(filter_name(Filter::dual_bound), std::string("dual_bound"));
}

}  // namespace
