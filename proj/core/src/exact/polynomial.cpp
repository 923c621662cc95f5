#include "qpoly/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly::exact {

namespace {

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Content-free integer version of p with positive leading coefficient.
IntPoly to_primitive_int(const RationalPoly& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  out.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntPoly& p) {
  trim_int(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    Integer la = a.back();
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    trim_int(a);
  }
  return a;
}

RationalPoly from_int(const IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return RationalPoly(std::move(c));
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::linear_root(const Rational& root) { return RationalPoly({-root, Rational(1)}); }

RationalPoly RationalPoly::from_roots(const std::vector<Rational>& roots) {
  RationalPoly p = constant(1);
  for (const auto& r : roots) p *= linear_root(r);
  return p;
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& RationalPoly::leading() const {
  static const Rational zero(0);
  return c_.empty() ? zero : c_.back();
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (c_.empty()) return {};
  RationalPoly out = *this;
  Rational l = c_.back();
  for (auto& v : out.c_) v /= l;
  return out;
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

RationalPoly RationalPoly::primitive() const { return from_int(to_primitive_int(*this)); }

Integer RationalPoly::primitive_leading() const {
  IntPoly p = to_primitive_int(*this);
  return p.empty() ? Integer(0) : p.back();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      out[i + j] += t;
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) { return *this = *this * o; }

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) {
      os << exact::to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  const auto& bc = b.coeffs();
  Rational f, t;
  for (int i = a.degree(); i >= db; --i) {
    f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      t = f * bc[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i - db + j)] -= t;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).first; }
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  IntPoly x = to_primitive_int(a), y = to_primitive_int(b);
  if (x.empty()) return from_int(y).monic();
  if (y.empty()) return from_int(x).monic();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_int(x).monic();
}

ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(1), s1;
  RationalPoly t0, t1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational l = r0.leading();
  Rational inv = 1 / l;
  return {r0 * inv, s0 * inv, t0 * inv};
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  RationalPoly g = gcd(p, p.derivative());
  return (p / g).primitive();
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
  std::vector<RationalPoly> out;
  if (p.degree() <= 0) return out;
  RationalPoly f = p.monic();
  RationalPoly a = gcd(f, f.derivative());
  RationalPoly b = f / a;
  RationalPoly c = f.derivative() / a;
  RationalPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RationalPoly g = gcd(b, d);
    out.push_back(g.monic());
    RationalPoly nb = b / g;
    c = d / g;
    b = nb;
    d = c - b.derivative();
  }
  return out;
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  RationalPoly f = a, g = b;
  Rational acc = 1;
  while (true) {
    const int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Rational p = 1;
      for (int i = 0; i < df; ++i) p *= g.leading();
      return acc * p;
    }
    RationalPoly r = f % g;
    if (r.is_zero()) return 0;
    if ((df % 2 == 1) && (dg % 2 == 1)) acc = -acc;
    const int e = df - r.degree();
    for (int i = 0; i < e; ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(r);
  }
}

RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  RationalPoly p = RationalPoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    p *= RationalPoly::linear_root(xs[k]);
    p += RationalPoly::constant(dd[k]);
  }
  return p;
}

}  // namespace qpoly::exact
