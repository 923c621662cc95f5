#include "qpoly/exact/interval.hpp"

#include <algorithm>

#include "qpoly/errors.hpp"

namespace qpoly::exact {

std::optional<int> Interval::sign() const {
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
  return std::nullopt;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval::point(a.lo * b.lo);
  if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

bool overlaps(const Interval& a, const Interval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

Interval evaluate(const RationalPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval::point(0);
  if (x.is_point()) return Interval::point(p(x.lo));
  const auto& c = p.coeffs();
  Interval acc = Interval::point(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x;
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

}  // namespace qpoly::exact
