#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "qpoly/families/corpus.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::graphs;
using exact::Real;

std::vector<std::pair<std::string, Graph>> corpus_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& e : families::corpus()) {
    const auto obj = e.build();
    if (const auto* g = std::get_if<Graph>(&obj)) out.emplace_back(e.name, *g);
  }
  return out;
}

void check_quotients(const Graph& g, const GraphSpectrum& spec) {
  const int k = *g.regular_degree();
  for (int x = 0; x < g.order(); ++x) {
    const auto q = quotient_matrix(g, bfs_partition(g, x));
    const auto s = quotient_system(g, q);
    EXPECT_EQ(s.kappa, Real(k));
    EXPECT_TRUE(tridiag::validate(s).valid) << "vertex " << x;
    EXPECT_TRUE(interlace_check(g, x, spec).pass) << "vertex " << x;
  }
}

TEST(GraphProps, RandomRegularGraphs) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    const int n = 6 + static_cast<int>(rng() % 11);
    int k = 2 + static_cast<int>(rng() % 4);
    if (k > n - 2) k = n - 2;
    if ((n * k) % 2) --k;
    const auto g = random_regular(n, k, rng());
    SCOPED_TRACE("graph " + std::to_string(i) + " " + emit_graph6(g));
    ASSERT_TRUE(g.is_connected());
    ASSERT_EQ(g.regular_degree(), k);
    const auto spec = spectrum_graph(g);
    check_quotients(g, spec);
    const auto kp = kpy_check(g);
    EXPECT_TRUE(kp.all_hold);
    EXPECT_TRUE(kp.consistent);
  }
}

TEST(GraphProps, CorpusGraphs) {
  for (const auto& [name, g] : corpus_graphs()) {
    SCOPED_TRACE(name);
    const auto reg = classify_regularity(g);
    if (!reg.connected || !reg.degree || g.is_complete()) continue;
    const auto spec = spectrum_graph(g);
    check_quotients(g, spec);
    const auto kp = kpy_check(g, spec, reg);
    EXPECT_TRUE(kp.all_hold);
    EXPECT_EQ(kp.equality_everywhere, reg.strongly_regular);
    if (!reg.distance_regular) continue;

    const auto arr = intersection_array(g);
    for (int x = 0; x < g.order(); ++x) {
      const auto q = quotient_matrix(g, bfs_partition(g, x));
      ASSERT_EQ(q.alpha.size(), arr.a.size());
      for (std::size_t i = 0; i < arr.a.size(); ++i) {
        EXPECT_EQ(q.alpha[i], Rational(arr.a[i]));
        if (i < arr.b.size()) EXPECT_EQ(q.beta[i], Rational(arr.b[i]));
        if (i > 0) EXPECT_EQ(q.gamma[i], Rational(arr.c[i - 1]));
      }
    }
    if (reg.diameter >= 3) {
      const auto p2 = thm31_check(g);
      for (const auto& b : p2.branches) {
        EXPECT_TRUE(b.ineq.holds);
        EXPECT_EQ(b.ineq.equality, reg.diameter == 3);
      }
    }
  }
}

}  // namespace
