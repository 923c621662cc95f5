#pragma once

// Integer-coefficient helpers shared by the Sturm and root isolation code.

#include <vector>

#include "qpoly/exact/polynomial.hpp"

namespace qpoly::exact::detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Integer multiple of p by a positive factor with content one. The sign of
/// the polynomial at every point is preserved.
inline IntPoly scaled_int(const RationalPoly& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

/// Divides by the (positive) content.
inline void remove_content(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1) {
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

/// Sign of p(num/den) for den > 0, using the homogenized integer form.
inline int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += p[i] * dpow;
  }
  return sgn(acc);
}

inline int sign_at(const IntPoly& p, const Rational& t) { return sign_at(p, t.get_num(), t.get_den()); }

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

/// Pseudo-remainder lc(b)^(da-db+1) * a mod b.
inline IntPoly prem(IntPoly a, const IntPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  int steps = static_cast<int>(a.size()) - 1 - db + 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    Integer la = a.back();
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
    --steps;
  }
  // Keep the multiplier exactly lc(b)^(da-db+1) so its sign is predictable.
  for (; steps > 0; --steps) {
    for (auto& v : a) v *= lb;
  }
  return a;
}

}  // namespace qpoly::exact::detail
