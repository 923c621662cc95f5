#include "qpoly/families/linked.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"

namespace qpoly::families {

using exact::Rational;
using exact::Real;

LinkedSystem cameron_goethals(int t) {
  if (t < 1 || t > 15) throw DomainError("Cameron-Goethals parameter must be in 1..15");
  const long p = 1L << (t - 1);  // 2^{t-1}
  LinkedSystem s;
  s.v = 4 * p * p;
  s.k = 2 * p * p - p;
  s.lambda = p * p - p;
  s.l = 2 * p * p - 1;
  if (s.lambda == 0) throw DomainError("t = 1 gives a trivial design");
  return s;
}

exact::Matrix<Real> linked_system_eigenmatrix(const LinkedSystem& p) {
  if (p.l < 1 || p.lambda < 1 || p.k <= p.lambda || p.v <= p.k || (p.eps != 1 && p.eps != -1))
    throw DomainError("inadmissible linked-system parameters");
  if (p.k * (p.k - 1) != p.lambda * (p.v - 1)) throw DomainError("not symmetric design parameters");
  // s = sqrt(k - lambda)
  const exact::RationalPoly sq{Rational(-(p.k - p.lambda)), Rational(0), Rational(1)};
  auto roots = exact::isolate_real_roots(sq);
  const Real s = Real::from_algebraic(roots.back());
  const Real l(p.l), v(p.v), k(p.k), e(static_cast<long>(p.eps));
  exact::Matrix<Real> P(4, 4);
  const Real rows[4][4] = {
      {Real(1), l * k, l * (v - k), v - Real(1)},
      {Real(1), -k, k - v, v - Real(1)},
      {Real(1), e * l * s, -(e * l * s), Real(-1)},
      {Real(1), -(e * s), e * s, Real(-1)},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) P(i, j) = rows[i][j];
  return P;
}

}  // namespace qpoly::families
