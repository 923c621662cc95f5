#pragma once

#include <optional>

#include "qpoly/exact/polynomial.hpp"
#include "qpoly/exact/rational.hpp"

namespace qpoly::exact {

/// Closed interval [lo, hi] with rational endpoints; arithmetic encloses
/// every possible result.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& r) { return {r, r}; }

  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }

  /// +1/-1 when the interval lies strictly on one side of zero, 0 for the
  /// point zero, empty when undecided.
  std::optional<int> sign() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);

bool overlaps(const Interval& a, const Interval& b);

/// Horner evaluation over an interval.
Interval evaluate(const RationalPoly& p, const Interval& x);

}  // namespace qpoly::exact
