#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpoly/exact/expr.hpp"
#include "qpoly/exact/matrix.hpp"
#include "qpoly/exact/real.hpp"
#include "qpoly/graphs/graph.hpp"

namespace qpoly::schemes {

using exact::Expr;
using exact::Integer;
using exact::Matrix;
using exact::Rational;
using exact::Real;

using Table3 = std::vector<std::vector<std::vector<Integer>>>;

/// Symmetric association scheme of class D. When built from relations,
/// relation(x, y) holds the index i with (x, y) in R_i; p[i][j][h] holds the
/// intersection numbers p_{ij}^h either way.
struct AssociationScheme {
  int n = 0;
  int d = 0;
  std::vector<int> relation;  // n*n entries, empty without points
  Table3 p;

  bool has_points() const { return !relation.empty(); }
  int rel(int x, int y) const { return relation[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)]; }
  std::vector<Integer> valencies() const;
  /// 0/1 adjacency matrix of R_i.
  Matrix<Integer> adjacency(int i) const;
};

/// From a relation matrix (entries 0..D). Throws SemanticError when the
/// relations do not form a symmetric association scheme.
AssociationScheme scheme_from_relations(int n, const std::vector<int>& relation);
/// From relations given as lists of ordered pairs; R_0 must be the diagonal.
AssociationScheme scheme_from_pairs(int n, const std::vector<std::vector<std::pair<int, int>>>& relations);
/// Distance relations of a distance-regular graph.
AssociationScheme scheme_from_graph(const graphs::Graph& g);

struct SchemeReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the axioms on the relation matrix (when present) and on the
/// intersection numbers: identity relation, symmetry, constant p_{ij}^h,
/// row sums, commutativity, associativity, class >= 2.
SchemeReport verify_scheme(const AssociationScheme& s);

/// P, Q, multiplicities and valencies. Rows of P are idempotents E_0..E_D
/// (E_0 first, the rest by decreasing eigenvalue of A_1, ties by later
/// columns); columns are relations.
struct EigenData {
  int n = 0;
  int d = 0;
  Matrix<Real> P;
  Matrix<Real> Q;
  std::vector<Real> m;
  std::vector<Real> k;
};

EigenData eigendata(const AssociationScheme& s);
/// From a first eigenmatrix supplied at parameter level; checks PQ = nI.
EigenData eigendata_from_p(const Matrix<Real>& P);

/// q[i][j][h] = q_{ij}^h, idempotents indexed as in EigenData.
struct KreinTable {
  std::vector<std::vector<std::vector<Real>>> q;
  const Real& operator()(int i, int j, int h) const {
    return q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(h)];
  }
};

KreinTable krein(const EigenData& e);

struct KreinReport {
  bool nonnegative = true;
  bool symmetric = true;
  bool identity_row = true;
  std::vector<std::string> violations;
};
KreinReport check_krein(const KreinTable& t);

}  // namespace qpoly::schemes
