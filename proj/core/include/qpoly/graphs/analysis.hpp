#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpoly/exact/expr.hpp"
#include "qpoly/exact/matrix.hpp"
#include "qpoly/graphs/graph.hpp"
#include "qpoly/tridiag/system.hpp"

namespace qpoly::graphs {

using exact::AlgebraicReal;
using exact::Expr;
using exact::Integer;
using exact::Matrix;
using exact::Rational;
using exact::RationalPoly;

struct DistancePartition {
  int base = 0;
  /// cells[i] = vertices at distance i from base, ascending.
  std::vector<std::vector<int>> cells;
  int eccentricity() const { return static_cast<int>(cells.size()) - 1; }
};

/// Throws DomainError for a disconnected graph.
DistancePartition bfs_partition(const Graph& g, int x);

struct QuotientMatrix {
  /// Entry (i, j): average number of neighbours in cell j of a vertex in cell i.
  Matrix<Rational> entries;
  std::vector<Rational> alpha, beta, gamma;  // indexed 0..D_x, beta[D_x] = gamma[0] = 0
  bool equitable = false;
};

QuotientMatrix quotient_matrix(const Graph& g, const DistancePartition& p);
/// The quotient as a tridiagonal system with kappa = k; requires a regular graph.
tridiag::TridiagonalSystem quotient_system(const Graph& g, const QuotientMatrix& q);

struct GraphSpectrum {
  RationalPoly charpoly;
  /// Distinct eigenvalues, decreasing.
  std::vector<AlgebraicReal> eigenvalues;
  std::vector<int> multiplicities;
};

GraphSpectrum spectrum_graph(const Graph& g);

struct InterlaceResult {
  bool pass = true;
  std::vector<AlgebraicReal> tau;  // quotient eigenvalues, decreasing
  std::string witness;
};

/// theta_1 >= tau_1 and tau_{D_x} >= theta_D.
InterlaceResult interlace_check(const Graph& g, int x, const GraphSpectrum& spec);
InterlaceResult interlace_check(const Graph& g, int x);

struct RegularityReport {
  bool connected = false;
  std::optional<int> degree;
  bool bipartite = false;
  std::vector<bool> distance_regular_around;
  bool distance_regularised = false;
  bool distance_regular = false;
  bool strongly_regular = false;
  /// Bipartite, distance-regularised, not distance-regular.
  bool distance_biregular = false;
  int diameter = 0;
};

RegularityReport classify_regularity(const Graph& g);

struct VertexBound {
  int vertex = 0;
  Expr lhs;
  Expr rhs;
  bool holds = false;
  bool equality = false;
};

struct KpyReport {
  std::vector<VertexBound> vertices;
  bool all_hold = false;
  bool equality_everywhere = false;
  bool strongly_regular = false;
  /// equality_everywhere agrees with classify_regularity.
  bool consistent = false;
};

/// (theta_1+1)(theta_D+1) <= -beta_1(x) at every vertex. Refuses complete,
/// edgeless, disconnected and non-regular graphs with DomainError.
KpyReport kpy_check(const Graph& g);
KpyReport kpy_check(const Graph& g, const GraphSpectrum& spec, const RegularityReport& reg);

struct IntersectionArray {
  std::vector<Integer> b;  // b_0..b_{D-1}
  std::vector<Integer> c;  // c_1..c_D
  std::vector<Integer> a;  // a_0..a_D
  Integer k;
  int diameter() const { return static_cast<int>(c.size()); }
  /// k_0..k_D; throws SemanticError when a k_i is not integral.
  std::vector<Integer> valencies() const;
  tridiag::TridiagonalSystem system() const;
  std::string to_string() const;
  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) { return x.b == y.b && x.c == y.c; }
};

IntersectionArray make_array(const std::vector<long>& b, const std::vector<long>& c);

/// Throws DomainError when the graph is not distance-regular.
IntersectionArray intersection_array(const Graph& g);

/// Theorem part 2 on the intersection matrix; DomainError when not a DRG
/// or diameter < 3.
tridiag::Part2Result thm31_check(const Graph& g);

struct FundamentalBound {
  Expr lhs;
  Expr rhs;
  bool holds = false;
  bool equality = false;
  bool bipartite = false;
  bool tight = false;
  Rational a1, b1, k;
};

FundamentalBound fundamental_bound(const Graph& g);
FundamentalBound fundamental_bound(const IntersectionArray& arr, const GraphSpectrum& spec, bool bipartite);

}  // namespace qpoly::graphs
