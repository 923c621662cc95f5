#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpoly/exact/matrix.hpp"
#include "qpoly/exact/polynomial.hpp"
#include "qpoly/exact/real.hpp"
#include "qpoly/schemes/scheme.hpp"

// Slow reference implementations, kept deliberately separate from the
// library code paths they check.
namespace qpoly::oracle {

using exact::Matrix;
using exact::Rational;
using exact::RationalPoly;
using exact::Real;

/// det(xI - A) by Laplace expansion along the first row.
RationalPoly cofactor_charpoly(const Matrix<Rational>& a);

/// Brackets [lo, hi] of sign changes of p found on a uniform grid over
/// the Cauchy interval, each shrunk by bisection to width below 2^-bits.
/// Zeros that land on a grid or bisection point come back as lo == hi.
std::vector<std::pair<Rational, Rational>> bisection_roots(const RationalPoly& p, int grid = 4096, int bits = 40);

struct BruteKrein {
  /// profile[j][u] = entry of E_j on any pair in relation u.
  std::vector<std::vector<Real>> profile;
  std::vector<Real> m;
  /// q[i][j][h], idempotents in the order of `profile`.
  std::vector<std::vector<std::vector<Real>>> q;
};

/// Idempotents E_j = L_j(M) for a generic M in the Bose-Mesner algebra,
/// L_j the Lagrange basis on the roots of M's minimal polynomial, and
/// q_ij^h = (n/m_h) sum_{x,y} E_i(x,y) E_j(x,y) E_h(x,y).
BruteKrein brute_force_krein(const schemes::AssociationScheme& s);

/// perm[j] = index of the eigendata idempotent equal to oracle idempotent j
/// (E_j = (1/n) sum_u Q(u,j) A_u). Throws when some idempotent has no match.
std::vector<int> match_idempotents(const BruteKrein& b, const schemes::EigenData& e);

}  // namespace qpoly::oracle

namespace qpoly::oracle {

struct NamedScheme {
  std::string name;
  schemes::AssociationScheme scheme;
};

/// Corpus schemes with points and at most max_n of them: the shipped
/// relation files plus the distance schemes of the shipped distance-regular
/// graphs that have no relation file of their own.
std::vector<NamedScheme> corpus_schemes(int max_n);

}  // namespace qpoly::oracle
