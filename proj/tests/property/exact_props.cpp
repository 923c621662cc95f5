#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/sturm.hpp"

namespace {

using namespace qpoly::exact;

Rational random_rational(std::mt19937_64& rng, int num, int den) {
  const long p = static_cast<long>(rng() % (2 * num + 1)) - num;
  const long q = 1 + static_cast<long>(rng() % den);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

TEST(ExactProps, IsolationRecoversRationalRoots) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    RationalPoly p = RationalPoly::constant(1);
    std::vector<Rational> roots;
    for (int i = 0; i < deg; ++i) {
      const Rational r = random_rational(rng, 12, 5);
      roots.push_back(r);
      p *= RationalPoly{Rational(-r), 1};
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto iso = isolate_real_roots(p);
    ASSERT_EQ(iso.size(), roots.size()) << "trial " << trial << " p = " << p.to_string();
    for (std::size_t i = 0; i < iso.size(); ++i) {
      EXPECT_EQ(compare(iso[i], roots[i]), 0) << "trial " << trial;
      EXPECT_TRUE(iso[i].is_rational());
    }
  }
}

TEST(ExactProps, SturmCountMatchesIsolation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 7);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, 9, 1));
    if (c.back() == 0) c.back() = 1;
    const RationalPoly p(c);
    const auto iso = isolate_real_roots(p);
    // The chain of p counts distinct real roots.
    EXPECT_EQ(SturmSequence(p).count_all(), static_cast<int>(iso.size())) << "trial " << trial;
    for (std::size_t i = 0; i + 1 < iso.size(); ++i) {
      // Isolating intervals are open, so shared endpoints are allowed.
      EXPECT_LE(iso[i].hi(), iso[i + 1].lo()) << "intervals overlap, trial " << trial;
      EXPECT_LT(compare(iso[i], iso[i + 1]), 0);
    }
  }
}

TEST(ExactProps, RefinementKeepsOrder) {
  std::mt19937_64 rng(13);
  std::vector<AlgebraicReal> pool;
  for (int trial = 0; trial < 30; ++trial) {
    const RationalPoly p{random_rational(rng, 20, 1), random_rational(rng, 5, 1), 1};
    for (const auto& r : isolate_real_roots(p)) pool.push_back(r);
  }
  ASSERT_GT(pool.size(), 10u);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const int c = compare(pool[i], pool[j]);
      EXPECT_EQ(compare(pool[i].refined_bits(60), pool[j]), c);
      EXPECT_EQ(compare(pool[j], pool[i]), -c);
    }
}

TEST(ExactProps, CompareIsTotalOrder) {
  std::mt19937_64 rng(14);
  std::vector<AlgebraicReal> pool;
  for (int trial = 0; trial < 25; ++trial) {
    const RationalPoly p{random_rational(rng, 10, 3), random_rational(rng, 4, 2), 1};
    for (const auto& r : isolate_real_roots(p)) pool.push_back(r);
    pool.emplace_back(random_rational(rng, 6, 4));
  }
  for (int t = 0; t < 2000; ++t) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    if (compare(a, b) <= 0 && compare(b, c) <= 0) EXPECT_LE(compare(a, c), 0);
    if (compare(a, b) == 0) EXPECT_EQ(compare(b, a), 0);
  }
}

}  // namespace
