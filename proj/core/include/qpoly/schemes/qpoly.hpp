#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpoly/schemes/scheme.hpp"
#include "qpoly/tridiag/system.hpp"

namespace qpoly::schemes {

/// A Q-polynomial ordering and the data read off its Krein matrix
/// B1* = (q_{1,j}^h), rows j and columns h in the ordering.
struct QPolyStructure {
  /// Idempotent indices E_0..E_D of the eigendata, ordering[1] = E_1.
  /// Empty for structures given only by a Krein array.
  std::vector<int> ordering;
  Real m;
  std::vector<Real> a_star, b_star, c_star;  // indexed 0..D, b*_D = c*_0 = 0
  Matrix<Real> b1star;
  /// theta*_u = Q_{u,E_1} per relation u (scheme input only).
  std::vector<Real> dual_by_relation;
  /// theta*_0 = m > theta*_1 > ... > theta*_D.
  std::vector<Real> dual_eigenvalues;
  /// Whether relation order already lists theta* decreasingly.
  bool relation_order_descending = false;
  /// Krein table re-indexed by this ordering.
  KreinTable krein;

  int d() const { return static_cast<int>(a_star.size()) - 1; }
  bool from_parameters() const { return ordering.empty(); }
};

/// Every E_1 whose induced ordering makes B1* irreducible tridiagonal.
std::vector<QPolyStructure> find_q_orderings(const EigenData& e, const KreinTable& t);

/// Parameter-level structure from a Krein array {b*_0..b*_{D-1}; c*_1..c*_D}
/// with b*_0 = m. Krein parameters follow from the three-term recurrence
/// of the Krein matrices; dual eigenvalues are the roots of the
/// characteristic polynomial. Throws SemanticError on malformed arrays.
QPolyStructure from_krein_array(const std::vector<Rational>& b_star, const std::vector<Rational>& c_star);

/// Krein matrices L*_u with (L*_u)_{hj} = q_{uj}^h from the dual array.
KreinTable krein_from_array(const std::vector<Real>& a_star, const std::vector<Real>& b_star, const std::vector<Real>& c_star);

/// Transpose of B1* as a tridiagonal system with kappa = m.
tridiag::TridiagonalSystem b1star_system(const QPolyStructure& qs);
/// Spectrum of that system, checked against the dual eigenvalues.
tridiag::SpectrumReport b1star_spectrum(const QPolyStructure& qs);

struct Thm41Result {
  tridiag::Part1Result part1;
  std::optional<tridiag::Part2Result> part2;
};
Thm41Result thm41_check(const QPolyStructure& qs);

struct DualBound {
  Expr lhs;
  Expr rhs;
  bool holds = false;
  bool equality = false;
  bool q_bipartite = false;
  bool dual_tight = false;
};
DualBound dual_fundamental_bound(const QPolyStructure& qs);

struct AuditRecord {
  std::string name;
  Expr lhs;
  Expr rhs;
  std::string relation;  // "==", "!=", ">=", "<="
  bool pass = false;
  std::string note;
};

struct AuditReport {
  std::vector<AuditRecord> records;
  bool all_pass = false;
  bool b2star_is_1 = false;
  bool b1star_eq_c2star = false;
  bool q_antipodal = false;
  /// A dual-tight instance with a*_3 != 0.
  bool a3_finding = false;
};

/// The class-3 dual-tight proof chain, checked identity by identity.
/// Throws DomainError unless D = 3.
AuditReport class3_dualtight_audit(const QPolyStructure& qs);

struct OrderingVerdict {
  std::vector<int> ordering;
  DualBound bound;
  std::optional<AuditReport> audit;
};

struct Thm51Result {
  bool dual_tight = false;
  std::vector<OrderingVerdict> orderings;
  std::optional<int> incidence_relation;
  std::optional<std::array<long, 3>> design;  // v, k, lambda
  /// dual_tight agrees with the presence of an incidence relation.
  bool consistent = false;
};

/// Throws DomainError unless the scheme has points, class 3 and a
/// Q-polynomial ordering.
Thm51Result thm51_classify(const AssociationScheme& s);
Thm51Result thm51_classify(const AssociationScheme& s, const std::vector<QPolyStructure>& structures);

/// Whether relation i's graph is the incidence graph of a nontrivial
/// symmetric 2-(v,k,lambda) design; returns (v, k, lambda).
std::optional<std::array<long, 3>> incidence_design(const AssociationScheme& s, int i);

}  // namespace qpoly::schemes
