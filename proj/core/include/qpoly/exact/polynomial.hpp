#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpoly/exact/rational.hpp"

namespace qpoly::exact {

/// Univariate polynomial with arbitrary-precision rational coefficients,
/// stored constant term first. The coefficient vector never carries
/// trailing zeros, so the zero polynomial is the empty vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);
  static RationalPoly x() { return monomial(1, 1); }
  /// x - root
  static RationalPoly linear_root(const Rational& root);
  /// Product of (x - r) over the given roots.
  static RationalPoly from_roots(const std::vector<Rational>& roots);

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn((*this)(t)); }

  RationalPoly derivative() const;
  RationalPoly monic() const;
  /// p(q(x)).
  RationalPoly compose(const RationalPoly& q) const;
  /// Positive rational multiple with coprime integer coefficients and a
  /// positive leading coefficient. Zero stays zero.
  RationalPoly primitive() const;
  /// Leading coefficient of primitive(); the integer that bounds the
  /// denominators of rational roots.
  Integer primitive_leading() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws DomainError on division by zero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPoly g, s, t;
};
ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b);

/// p / gcd(p, p'), made primitive.
RationalPoly squarefree_part(const RationalPoly& p);

/// Yun's square-free decomposition: element i holds the product of the
/// irreducible factors of multiplicity i+1 (monic; may be constant 1).
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

/// Resultant of two polynomials over Q.
Rational resultant(const RationalPoly& a, const RationalPoly& b);

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace qpoly::exact
