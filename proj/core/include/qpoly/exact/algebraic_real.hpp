#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qpoly/exact/interval.hpp"
#include "qpoly/exact/polynomial.hpp"
#include "qpoly/exact/rational.hpp"

namespace qpoly::exact {

/// A real algebraic number: a square-free defining polynomial together with
/// a rational isolating interval holding exactly one of its roots.
///
/// Either lo == hi (the number is that rational and the defining polynomial
/// is linear), or lo < hi, the endpoints are not roots, and the open
/// interval contains exactly one root. Values are immutable; refinement
/// returns a new value.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  explicit AlgebraicReal(const Rational& value);
  /// Checks the isolation invariant with a Sturm count; throws DomainError
  /// when [lo, hi] does not isolate exactly one root of `poly`.
  AlgebraicReal(const RationalPoly& poly, const Rational& lo, const Rational& hi);

  bool is_rational() const { return lo_ == hi_; }
  /// Only valid when is_rational().
  const Rational& rational_value() const;

  const RationalPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }

  /// Bisects until the interval width is at most `max_width`.
  AlgebraicReal refined(const Rational& max_width) const;
  /// Width at most 2^-bits.
  AlgebraicReal refined_bits(int bits) const;
  /// One bisection step.
  AlgebraicReal bisected() const;

  double approx() const;
  /// "root of <poly> in [lo, hi]" or the rational value.
  std::string to_string() const;

 private:
  struct Unchecked {};
  AlgebraicReal(Unchecked, RationalPoly poly, Rational lo, Rational hi)
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  friend std::vector<AlgebraicReal> isolate_squarefree(const RationalPoly& p);

  RationalPoly poly_;
  Rational lo_;
  Rational hi_;
};

/// Exact three-way comparison (-1, 0, +1). Equality is decided by a common
/// root of gcd(p_a, p_b) inside both intervals, never by tolerance.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
int compare(const AlgebraicReal& a, const Rational& b);

inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
inline std::ostream& operator<<(std::ostream& os, const AlgebraicReal& a) { return os << a.to_string(); }

struct RootWithMultiplicity {
  AlgebraicReal root;
  int multiplicity;
};

/// Distinct real roots of a nonzero polynomial, strictly increasing.
/// Rational roots come back as exact rationals; irrational roots carry the
/// square-free factor they belong to with all rational roots divided out.
std::vector<AlgebraicReal> isolate_real_roots(const RationalPoly& p);

/// As isolate_real_roots, with multiplicities from the square-free
/// decomposition.
std::vector<RootWithMultiplicity> isolate_real_roots_with_multiplicity(const RationalPoly& p);

/// Roots of an already square-free polynomial, increasing, no rational
/// detection (defining polynomial is p itself, made primitive).
std::vector<AlgebraicReal> isolate_squarefree(const RationalPoly& p);

}  // namespace qpoly::exact
