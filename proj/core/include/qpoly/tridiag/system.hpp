#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpoly/exact/expr.hpp"
#include "qpoly/exact/matrix.hpp"
#include "qpoly/exact/real.hpp"

namespace qpoly::tridiag {

using exact::AlgebraicReal;
using exact::Expr;
using exact::Integer;
using exact::Matrix;
using exact::Rational;
using exact::RationalPoly;
using exact::Real;

/// Nonnegative (D+1)x(D+1) tridiagonal matrix B with alpha on the diagonal,
/// beta above and gamma below. Vectors are indexed 0..D; beta[D] and
/// gamma[0] are stored as zero.
struct TridiagonalSystem {
  Real kappa;
  std::vector<Real> alpha;
  std::vector<Real> beta;
  std::vector<Real> gamma;

  int diameter() const { return static_cast<int>(alpha.size()) - 1; }
  bool is_rational() const;

  /// From beta_0..beta_{D-1} and gamma_1..gamma_D, with
  /// alpha_i = kappa - beta_i - gamma_i.
  static TridiagonalSystem from_sides(const Real& kappa, const std::vector<Real>& beta, const std::vector<Real>& gamma);
  /// From explicit alpha_0..alpha_D, beta_0..beta_{D-1}, gamma_1..gamma_D.
  static TridiagonalSystem from_arrays(const Real& kappa, const std::vector<Real>& alpha, const std::vector<Real>& beta,
                                       const std::vector<Real>& gamma);
};

struct ValidationReport {
  bool valid = true;
  /// Clause identifiers with a short explanation, in check order.
  std::vector<std::string> violations;
};

ValidationReport validate(const TridiagonalSystem& s);
/// Throws SemanticError naming the first violated clause.
void require_valid(const TridiagonalSystem& s);

Matrix<Real> full_matrix(const TridiagonalSystem& s);
/// D x D matrix whose eigenvalues are theta_1..theta_D.
Matrix<Real> reduced_matrix(const TridiagonalSystem& s);

/// F_0..F_D by the three-term recurrence; rational systems only.
std::vector<RationalPoly> f_polynomials(const TridiagonalSystem& s);

struct SpectrumReport {
  /// theta_0 = kappa > theta_1 > ... > theta_D.
  std::vector<Expr> eigenvalues;
  /// Present for rational systems: F_0..F_D and the roots of F_1..F_D in
  /// decreasing order (root_table[i-1][j-1] = alpha_{i,j}).
  std::vector<RationalPoly> f_polys;
  std::vector<std::vector<AlgebraicReal>> root_table;
};

/// Rational systems: isolates the roots of every F_i.
SpectrumReport spectrum(const TridiagonalSystem& s);
/// Any system: checks that `candidates` are D+1 distinct roots of the
/// characteristic polynomial of B, kappa among them, and sorts them.
/// Throws SemanticError otherwise.
SpectrumReport spectrum_from(const TridiagonalSystem& s, const std::vector<Real>& candidates);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

/// alpha_{i,j+1} < alpha_{i-1,j} < alpha_{i,j} for all 2 <= i <= D, 1 <= j < i.
CheckResult interlacing_check(const SpectrumReport& r);

struct LemmaResult {
  Expr f;
  Expr g;
  bool holds;
  bool equal;
};
/// f(t) = (t-a)(t-d) <= g(t) = (t-b)(t-c) for a <= b < c <= d, t in [b, c].
LemmaResult lemma_ineq(const Expr& a, const Expr& b, const Expr& c, const Expr& d, const Expr& t);

struct Inequality {
  Expr lhs;
  Expr rhs;
  std::string relation;  // "<=" or ">="
  bool holds = false;
  bool equality = false;
};

struct Part1Result {
  Inequality ineq;
  /// Equality is expected exactly for D = 2.
  bool consistent = false;
};

struct Part2Branch {
  std::string branch;  // "ge" when beta2+gamma3 >= kappa+1, "le" otherwise
  Inequality ineq;
};

struct Part2Result {
  int comparison = 0;  // sign of beta2 + gamma3 - (kappa + 1)
  std::vector<Part2Branch> branches;
  bool consistent = false;
};

/// (theta_1+1)(theta_D+1) <= -beta_1.
Part1Result thm1_part1(const TridiagonalSystem& s, const SpectrumReport& r);
Part1Result thm1_part1(const TridiagonalSystem& s);
/// The two three-factor bounds for D >= 3; both branches when
/// beta2 + gamma3 = kappa + 1.
Part2Result thm1_part2(const TridiagonalSystem& s, const SpectrumReport& r);
Part2Result thm1_part2(const TridiagonalSystem& s);

/// Seeded generator of valid rational systems.
class RandomSystems {
 public:
  explicit RandomSystems(std::uint64_t seed);
  TridiagonalSystem next(int diameter);

 private:
  std::uint64_t below(std::uint64_t n);
  Rational draw(const Rational& lo, const Rational& hi);
  std::mt19937_64 rng_;
};

}  // namespace qpoly::tridiag
