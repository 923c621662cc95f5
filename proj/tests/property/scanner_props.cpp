#include <gtest/gtest.h>

#include "qpoly/scanner/scan.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::scanner;

void check_result(const CandidateResult& r) {
  if (r.rejected_at) {
    const auto j = to_json(r);
    bool after = false;
    for (Filter f : kFilters) {
      if (after) EXPECT_TRUE(j["filters"][filter_name(f)].is_null());
      if (f == *r.rejected_at) after = true;
    }
    EXPECT_FALSE(r.audit.has_value());
  }
  if (r.c.c3 == r.c.m) EXPECT_EQ(r.a_star[3], 0);
  if (r.dual_tight()) {
    ASSERT_TRUE(r.survived());
    ASSERT_TRUE(r.audit.has_value());
    EXPECT_TRUE(r.audit->all_pass);
    EXPECT_TRUE(r.audit->b2star_is_1);
    EXPECT_TRUE(r.audit->b1star_eq_c2star);
  }
  EXPECT_FALSE(r.alarm);
}

TEST(ScannerProps, IntegerGrid) {
  ScanConfig cfg;
  cfg.m_max = 7;
  scan(cfg, check_result);
}

TEST(ScannerProps, HalfStepGrid) {
  ScanConfig cfg;
  cfg.m_min = Rational(1, 2);
  cfg.m_max = 4;
  cfg.step = Rational(1, 2);
  scan(cfg, check_result);
}

TEST(ScannerProps, KreinFilterOnlyRemoves) {
  ScanConfig on, off;
  on.m_max = off.m_max = 6;
  off.krein = false;
  std::vector<bool> survived_on;
  scan(on, [&](const CandidateResult& r) { survived_on.push_back(r.survived()); });
  std::size_t i = 0;
  scan(off, [&](const CandidateResult& r) {
    if (survived_on[i]) EXPECT_TRUE(r.survived());
    ++i;
  });
}

}  // namespace
