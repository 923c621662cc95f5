#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/number_field.hpp"

namespace qpoly::exact {

/// Exact real number: a rational, or an element of a NumberField.
/// Arithmetic between elements of different fields goes through their
/// (cached) compositum. Comparisons are exact.
class Real {
 public:
  Real() = default;
  Real(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  Real(long v) : q_(v) {}             // NOLINT(google-explicit-constructor)
  Real(int v) : q_(v) {}              // NOLINT(google-explicit-constructor)
  Real(const FieldPtr& field, RationalPoly rep);

  static Real from_algebraic(const AlgebraicReal& a);

  /// Cheap syntactic test: true when the value is stored as a rational.
  bool is_rational() const { return !field_; }
  /// Only valid when is_rational().
  const Rational& rational() const;
  const FieldPtr& field() const { return field_; }
  const RationalPoly& rep() const { return rep_; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Interval enclose(int bits) const;
  double approx() const;

  /// Defining polynomial and canonical isolating interval, from the
  /// characteristic polynomial of multiplication by this element.
  AlgebraicReal to_algebraic() const;
  /// Exact rational value if there is one (decided exactly).
  std::optional<Rational> as_rational() const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  std::string to_string() const;

 private:
  void normalize();
  /// Moves both operands into one field.
  static void unify(Real& a, Real& b);

  Rational q_;
  FieldPtr field_;
  RationalPoly rep_;
};

int compare(const Real& a, const Real& b);
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return compare(a, b) != 0; }
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

/// Places the numbers in one field (see common_field) and returns them as
/// Reals sharing it.
std::vector<Real> to_reals(const std::vector<AlgebraicReal>& numbers);

}  // namespace qpoly::exact
