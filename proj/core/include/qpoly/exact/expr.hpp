#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/interval.hpp"
#include "qpoly/exact/real.hpp"

namespace qpoly::exact {

/// Lazy arithmetic expression over exact leaves. Signs are decided from
/// interval enclosures at increasing precision; only when those cannot
/// separate the value from zero is the expression evaluated exactly in a
/// common number field of its leaves.
class Expr {
 public:
  Expr() : Expr(Rational(0)) {}
  Expr(const Rational& q);        // NOLINT(google-explicit-constructor)
  Expr(long v) : Expr(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Expr(int v) : Expr(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Expr(const AlgebraicReal& a);   // NOLINT(google-explicit-constructor)
  Expr(const Real& r);            // NOLINT(google-explicit-constructor)

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  Interval enclose(int bits) const;
  /// Exact value.
  Real value() const;
  int sign() const;

  struct Node;
  friend int compare(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  void collect(std::vector<AlgebraicReal>& algebraic) const;
  Real evaluate(const std::vector<Real>& algebraic, std::size_t& next) const;

  std::shared_ptr<const Node> n_;
};

/// Sign of a - b.
int compare(const Expr& a, const Expr& b);

}  // namespace qpoly::exact
