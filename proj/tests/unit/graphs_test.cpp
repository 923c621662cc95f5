#include <gtest/gtest.h>

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/families/builders.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::graphs;
using exact::Real;
namespace fam = qpoly::families;

std::vector<std::size_t> cell_sizes(const DistancePartition& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.cells) out.push_back(c.size());
  return out;
}

bool same(const Expr& a, const Expr& b) { return exact::compare(a, b) == 0; }
AlgebraicReal sqrt_of(long n) { return exact::isolate_real_roots(RationalPoly{Rational(-n), 0, 1}).back(); }

TEST(Graph6, PentagonByHand) {
  const Graph c5 = fam::cycle(5);
  EXPECT_EQ(emit_graph6(c5), "Dhc");
  EXPECT_EQ(parse_graph6("Dhc"), c5);
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), c5);
}

TEST(Graph6, EdgelessPair) {
  const Graph g = parse_graph6("A?");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Graph6, StandardPetersen) {
  const Graph g = parse_graph6("IheA@GUAo");
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_TRUE(isomorphic(g, fam::petersen()));
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("Dh"), ParseError);
  EXPECT_THROW(parse_graph6("Dh\x7f"), ParseError);
  try {
    parse_graph6("Dh c");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.offset(), ParseError::npos);
  }
}

TEST(Graph6, RoundTripCorpusGraphs) {
  for (const auto& name : fam::graph_names()) {
    if (name.find('<') != std::string::npos) continue;
    const Graph g = fam::graph_by_name(name);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << name;
    EXPECT_EQ(parse_json_graph(emit_json_graph(g)), g) << name;
  }
}

TEST(Graph, RejectsLoopsAndRepeats) {
  EXPECT_THROW(Graph(3, {{0, 0}}), SemanticError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), SemanticError);
  EXPECT_THROW(Graph(3, {{0, 3}}), SemanticError);
}

TEST(Partition, CellSizes) {
  for (int x = 0; x < 5; ++x) EXPECT_EQ(cell_sizes(bfs_partition(fam::cycle(5), x)), (std::vector<std::size_t>{1, 2, 2}));
  for (int x = 0; x < 6; ++x) EXPECT_EQ(cell_sizes(bfs_partition(fam::complete_bipartite(3, 3), x)), (std::vector<std::size_t>{1, 3, 2}));
  for (int x = 0; x < 10; ++x) EXPECT_EQ(cell_sizes(bfs_partition(fam::petersen(), x)), (std::vector<std::size_t>{1, 3, 6}));
}

TEST(Partition, DisconnectedRejected) { EXPECT_THROW(bfs_partition(Graph(4, {{0, 1}, {2, 3}}), 0), DomainError); }

void expect_matrix(const QuotientMatrix& q, const std::vector<std::vector<long>>& m) {
  ASSERT_EQ(q.entries.rows(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(q.entries(i, j), m[i][j]) << i << "," << j;
}

TEST(Quotient, Examples) {
  const Graph c5 = fam::cycle(5), p = fam::petersen(), h = fam::heawood();
  expect_matrix(quotient_matrix(c5, bfs_partition(c5, 0)), {{0, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  expect_matrix(quotient_matrix(p, bfs_partition(p, 0)), {{0, 3, 0}, {1, 0, 2}, {0, 1, 2}});
  const auto q = quotient_matrix(h, bfs_partition(h, 0));
  EXPECT_EQ(q.beta, (std::vector<Rational>{3, 2, 2, 0}));
  EXPECT_EQ(q.gamma, (std::vector<Rational>{0, 1, 1, 3}));
  EXPECT_EQ(q.alpha, (std::vector<Rational>{0, 0, 0, 0}));
  EXPECT_TRUE(q.equitable);
}

TEST(Quotient, NonEquitableAverages) {
  // Path-plus-pendant: 0-1, 1-2, 1-3, 2-3 around vertex 0.
  const Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  const auto q = quotient_matrix(g, bfs_partition(g, 0));
  EXPECT_EQ(q.entries(2, 2), 1);
  const Graph lp = fam::line_graph(fam::petersen());
  const auto r = quotient_matrix(lp, bfs_partition(lp, 0));
  EXPECT_TRUE(tridiag::validate(quotient_system(lp, r)).valid);
}

TEST(Spectrum, Examples) {
  const auto c5 = spectrum_graph(fam::cycle(5));
  EXPECT_EQ(c5.multiplicities, (std::vector<int>{1, 2, 2}));
  const auto golden = exact::isolate_real_roots(RationalPoly{-1, 1, 1});
  EXPECT_EQ(compare(c5.eigenvalues[1], golden[1]), 0);
  EXPECT_EQ(compare(c5.eigenvalues[2], golden[0]), 0);

  const auto p = spectrum_graph(fam::petersen());
  EXPECT_EQ(p.multiplicities, (std::vector<int>{1, 5, 4}));
  EXPECT_EQ(compare(p.eigenvalues[2], Rational(-2)), 0);

  const auto h = spectrum_graph(fam::heawood());
  EXPECT_EQ(h.multiplicities, (std::vector<int>{1, 6, 6, 1}));
  EXPECT_EQ(compare(h.eigenvalues[1], sqrt_of(2)), 0);
}

TEST(Interlace, Examples) {
  for (int x = 0; x < 5; ++x) EXPECT_TRUE(interlace_check(fam::cycle(5), x).pass);
  const Graph c6 = fam::cycle(6);
  for (int x = 0; x < 6; ++x) EXPECT_TRUE(interlace_check(c6, x).pass);
  const auto p = interlace_check(fam::petersen(), 3);
  EXPECT_TRUE(p.pass);
  EXPECT_EQ(compare(p.tau[1], Rational(1)), 0);
  EXPECT_EQ(compare(p.tau[2], Rational(-2)), 0);
}

TEST(Regularity, Examples) {
  const auto p = classify_regularity(fam::petersen());
  EXPECT_TRUE(p.distance_regular);
  EXPECT_TRUE(p.strongly_regular);
  const auto h = classify_regularity(fam::heawood());
  EXPECT_TRUE(h.distance_regular);
  EXPECT_TRUE(h.bipartite);
  EXPECT_FALSE(h.strongly_regular);
  const auto path = classify_regularity(Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(path.degree.has_value());
  EXPECT_FALSE(path.distance_regular);
  const auto prism = classify_regularity(fam::generalized_petersen(5, 1));
  EXPECT_TRUE(prism.degree.has_value());
  EXPECT_FALSE(prism.distance_regular);
  EXPECT_FALSE(prism.strongly_regular);
  const auto lp = classify_regularity(fam::line_graph(fam::petersen()));
  EXPECT_TRUE(lp.distance_regular);
  EXPECT_EQ(lp.diameter, 3);
}

TEST(Kpy, Petersen) {
  const auto r = kpy_check(fam::petersen());
  ASSERT_EQ(r.vertices.size(), 10u);
  for (const auto& v : r.vertices) {
    EXPECT_TRUE(same(v.lhs, Expr(Rational(-2))));
    EXPECT_TRUE(same(v.rhs, Expr(Rational(-2))));
    EXPECT_TRUE(v.equality);
  }
  EXPECT_TRUE(r.equality_everywhere);
  EXPECT_TRUE(r.strongly_regular);
  EXPECT_TRUE(r.consistent);
}

TEST(Kpy, Pentagon) {
  const auto r = kpy_check(fam::cycle(5));
  for (const auto& v : r.vertices) EXPECT_TRUE(same(v.lhs, Expr(Rational(-1))));
  EXPECT_TRUE(r.equality_everywhere);
}

TEST(Kpy, HeawoodStrict) {
  const auto r = kpy_check(fam::heawood());
  for (const auto& v : r.vertices) {
    EXPECT_TRUE(v.holds);
    EXPECT_FALSE(v.equality);
    EXPECT_TRUE(same(v.lhs, Expr(Rational(-2)) - Expr(Rational(2)) * Expr(sqrt_of(2))));
  }
  EXPECT_FALSE(r.equality_everywhere);
  EXPECT_TRUE(r.consistent);
}

TEST(Kpy, RefusedInputs) {
  EXPECT_THROW(kpy_check(fam::complete(5)), DomainError);
  EXPECT_THROW(kpy_check(Graph(3, {{0, 1}, {1, 2}})), DomainError);
  EXPECT_THROW(kpy_check(Graph(1, {})), DomainError);
}

TEST(Kpy, NonDistanceRegularStrict) {
  const auto r = kpy_check(fam::generalized_petersen(5, 1));
  EXPECT_TRUE(r.all_hold);
  EXPECT_FALSE(r.equality_everywhere);
  EXPECT_TRUE(r.consistent);
}

TEST(Array, Examples) {
  EXPECT_EQ(intersection_array(fam::heawood()), make_array({3, 2, 2}, {1, 1, 3}));
  EXPECT_EQ(intersection_array(fam::icosahedron()), make_array({5, 2, 1}, {1, 2, 5}));
  EXPECT_EQ(intersection_array(fam::cube(3)), make_array({3, 2, 1}, {1, 2, 3}));
  EXPECT_EQ(intersection_array(fam::heawood()).to_string(), "{3,2,2;1,1,3}");
  EXPECT_EQ(intersection_array(fam::heawood()).valencies(), (std::vector<Integer>{1, 3, 6, 4}));
  EXPECT_EQ(intersection_array(fam::line_graph(fam::petersen())), make_array({4, 2, 1}, {1, 1, 4}));
  EXPECT_THROW(intersection_array(fam::generalized_petersen(5, 1)), DomainError);
}

TEST(Array, MatchesQuotientAtEveryVertex) {
  for (const char* name : {"petersen", "heawood", "icosahedron", "cube", "h4_2", "j6_3", "dodecahedron"}) {
    const Graph g = fam::graph_by_name(name);
    const auto sys = intersection_array(g).system();
    for (int x = 0; x < g.order(); ++x) {
      const auto q = quotient_matrix(g, bfs_partition(g, x));
      for (std::size_t i = 0; i < q.alpha.size(); ++i) {
        EXPECT_TRUE(sys.alpha[i] == Real(q.alpha[i])) << name;
        EXPECT_TRUE(sys.beta[i] == Real(q.beta[i])) << name;
        EXPECT_TRUE(sys.gamma[i] == Real(q.gamma[i])) << name;
      }
    }
  }
}

TEST(ThreeFactorGraph, Examples) {
  const auto h = thm31_check(fam::heawood());
  ASSERT_EQ(h.branches.size(), 1u);
  EXPECT_TRUE(same(h.branches[0].ineq.lhs, Expr(Rational(2))));
  EXPECT_TRUE(h.branches[0].ineq.equality);

  const auto c = thm31_check(fam::cube(3));
  ASSERT_EQ(c.branches.size(), 2u);
  for (const auto& b : c.branches) EXPECT_TRUE(same(b.ineq.lhs, Expr(Rational(0))) && b.ineq.equality);

  const auto q4 = thm31_check(fam::hamming(4, 2));
  for (const auto& b : q4.branches) {
    EXPECT_TRUE(b.ineq.holds);
    EXPECT_FALSE(b.ineq.equality);
  }
  EXPECT_THROW(thm31_check(fam::petersen()), DomainError);
}

TEST(Fundamental, Icosahedron) {
  const auto r = fundamental_bound(fam::icosahedron());
  EXPECT_TRUE(same(r.lhs, Expr(Rational(-20, 9))));
  EXPECT_TRUE(same(r.rhs, Expr(Rational(-20, 9))));
  EXPECT_TRUE(r.equality);
  EXPECT_FALSE(r.bipartite);
  EXPECT_TRUE(r.tight);
}

TEST(Fundamental, BipartiteAndPetersen) {
  const auto h = fundamental_bound(fam::heawood());
  EXPECT_TRUE(h.bipartite);
  EXPECT_FALSE(h.tight);
  EXPECT_TRUE(same(h.rhs, Expr(Rational(0))));
  const auto p = fundamental_bound(fam::petersen());
  EXPECT_TRUE(same(p.lhs, Expr(Rational(4))));
  EXPECT_TRUE(same(p.rhs, Expr(Rational(0))));
  EXPECT_TRUE(p.holds);
  EXPECT_FALSE(p.tight);
}

TEST(Random, RegularGraphsSeeded) {
  const Graph a = random_regular(12, 3, 99), b = random_regular(12, 3, 99);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.regular_degree(), 3);
  EXPECT_TRUE(a.is_connected());
  EXPECT_THROW(random_regular(5, 3, 1), DomainError);
}

}  // namespace
