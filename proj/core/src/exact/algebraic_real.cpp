#include "qpoly/exact/algebraic_real.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "int_poly.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/exact/sturm.hpp"

namespace qpoly::exact {

AlgebraicReal::AlgebraicReal(const Rational& value)
    : poly_(RationalPoly::linear_root(value).primitive()), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(const RationalPoly& poly, const Rational& lo, const Rational& hi)
    : poly_(poly.primitive()), lo_(lo), hi_(hi) {
  if (poly_.degree() < 1) throw DomainError("defining polynomial must have positive degree");
  if (hi_ < lo_) throw DomainError("isolating interval with lo > hi");
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) throw DomainError("degenerate interval is not a root");
    poly_ = RationalPoly::linear_root(lo_).primitive();
    return;
  }
  if (poly_(lo_) == 0 || poly_(hi_) == 0) throw DomainError("isolating interval endpoint is a root");
  if (gcd(poly_, poly_.derivative()).degree() > 0) throw DomainError("defining polynomial is not square-free");
  SturmSequence s(poly_);
  if (s.count_half_open(lo_, hi_) != 1) throw DomainError("interval does not isolate exactly one root");
}

const Rational& AlgebraicReal::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  return lo_;
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (is_rational()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  int sm = poly_.sign_at(mid);
  if (sm == 0) return AlgebraicReal(mid);
  int sl = poly_.sign_at(lo_);
  if (sm == sl) return AlgebraicReal(Unchecked{}, poly_, mid, hi_);
  return AlgebraicReal(Unchecked{}, poly_, lo_, mid);
}

AlgebraicReal AlgebraicReal::refined(const Rational& max_width) const {
  if (is_rational() || hi_ - lo_ <= max_width) return *this;
  detail::IntPoly ip = detail::scaled_int(poly_);
  Rational lo = lo_, hi = hi_;
  const int sl = detail::sign_at(ip, lo);
  while (hi - lo > max_width) {
    Rational mid = (lo + hi) / 2;
    int sm = detail::sign_at(ip, mid);
    if (sm == 0) return AlgebraicReal(mid);
    if (sm == sl) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return AlgebraicReal(Unchecked{}, poly_, lo, hi);
}

AlgebraicReal AlgebraicReal::refined_bits(int bits) const {
  Rational w = 1;
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return refined(w);
}

double AlgebraicReal::approx() const {
  AlgebraicReal r = refined_bits(60);
  Rational m = (r.lo_ + r.hi_) / 2;
  return m.get_d();
}

std::string AlgebraicReal::to_string() const {
  if (is_rational()) return exact::to_string(lo_);
  std::ostringstream os;
  os << "root of " << poly_.to_string() << " in [" << exact::to_string(lo_) << ", " << exact::to_string(hi_) << "]";
  return os.str();
}

int compare(const AlgebraicReal& a, const Rational& b) {
  if (a.is_rational()) return cmp(a.rational_value(), b);
  if (b <= a.lo()) return 1;
  if (b >= a.hi()) return -1;
  int sb = a.poly().sign_at(b);
  if (sb == 0) return 0;
  int sl = a.poly().sign_at(a.lo());
  // Root is in (lo, b) when the sign changes there.
  return sb == sl ? 1 : -1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational()) return -compare(b, a.rational_value());
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.hi() < b.lo()) return -1;
  if (b.hi() < a.lo()) return 1;
  RationalPoly g = gcd(a.poly(), b.poly());
  if (g.degree() >= 1) {
    Rational lo = std::max(a.lo(), b.lo());
    Rational hi = std::min(a.hi(), b.hi());
    SturmSequence s(g);
    if (s.count_closed(lo, hi) >= 1) return 0;
  }
  AlgebraicReal x = a, y = b;
  while (true) {
    x = x.bisected();
    y = y.bisected();
    if (x.hi() < y.lo()) return -1;
    if (y.hi() < x.lo()) return 1;
    if (x.is_rational() && y.is_rational()) return cmp(x.rational_value(), y.rational_value());
  }
}

std::vector<AlgebraicReal> isolate_squarefree(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  if (p.degree() == 0) return {};
  RationalPoly prim = p.primitive();
  SturmSequence s(prim);
  const Rational bound = cauchy_bound(prim);
  struct Piece {
    Rational a, b;
    int count;
  };
  std::vector<Piece> stack{{-bound, bound, s.count_half_open(-bound, bound)}};
  std::vector<AlgebraicReal> found;
  while (!stack.empty()) {
    Piece pc = stack.back();
    stack.pop_back();
    if (pc.count == 0) continue;
    if (pc.count == 1) {
      // Exactly one root in (a, b]; move the endpoints off roots.
      Rational a = pc.a, b = pc.b;
      if (s.sign_of_base_at(b) == 0) {
        found.emplace_back(b);
        continue;
      }
      bool exact = false;
      while (s.sign_of_base_at(a) == 0) {
        Rational mid = (a + b) / 2;
        if (s.sign_of_base_at(mid) == 0) {
          found.emplace_back(mid);
          exact = true;
          break;
        }
        if (s.count_half_open(a, mid) == 1) {
          b = mid;
        } else {
          a = mid;
        }
      }
      if (!exact) found.push_back(AlgebraicReal(AlgebraicReal::Unchecked{}, prim, a, b));
      continue;
    }
    Rational mid = (pc.a + pc.b) / 2;
    int left = s.count_half_open(pc.a, mid);
    stack.push_back({mid, pc.b, pc.count - left});
    stack.push_back({pc.a, mid, left});
  }
  std::sort(found.begin(), found.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lo() < y.lo(); });
  return found;
}

namespace {

// Detects a rational root inside an isolating interval. Rational roots of
// a content-free integer polynomial are multiples of 1/lc.
std::optional<Rational> rational_root_in(const AlgebraicReal& r) {
  if (r.is_rational()) return r.rational_value();
  Integer lc = abs(r.poly().primitive_leading());
  AlgebraicReal t = r.refined(Rational(1, 2) / Rational(lc));
  if (t.is_rational()) return t.rational_value();
  Rational c(ceil(t.lo() * lc), lc);
  c.canonicalize();
  if (c <= t.hi() && r.poly()(c) == 0) return c;
  return std::nullopt;
}

}  // namespace

std::vector<RootWithMultiplicity> isolate_real_roots_with_multiplicity(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<RootWithMultiplicity> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    auto roots = isolate_squarefree(parts[i]);
    std::vector<Rational> rational_roots;
    std::vector<std::size_t> irrational;
    std::vector<AlgebraicReal> resolved(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (auto q = rational_root_in(roots[j])) {
        rational_roots.push_back(*q);
        resolved[j] = AlgebraicReal(*q);
      } else {
        irrational.push_back(j);
      }
    }
    if (!irrational.empty()) {
      RationalPoly reduced = (parts[i] / RationalPoly::from_roots(rational_roots)).primitive();
      for (std::size_t j : irrational) {
        resolved[j] = AlgebraicReal(reduced, roots[j].lo(), roots[j].hi());
      }
    }
    for (auto& r : resolved) out.push_back({std::move(r), static_cast<int>(i) + 1});
  }
  std::sort(out.begin(), out.end(), [](const RootWithMultiplicity& x, const RootWithMultiplicity& y) { return compare(x.root, y.root) < 0; });
  // Roots of different square-free parts were isolated separately; shrink
  // until neighbouring intervals are disjoint. Shrinking never undoes an
  // earlier pair, so one pass suffices.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    auto& a = out[i].root;
    auto& b = out[i + 1].root;
    while (a.hi() > b.lo()) {
      const bool shrink_a = !a.is_rational() && (b.is_rational() || a.hi() - a.lo() >= b.hi() - b.lo());
      if (shrink_a) {
        a = a.bisected();
      } else {
        b = b.bisected();
      }
    }
  }
  return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const RationalPoly& p) {
  std::vector<AlgebraicReal> out;
  for (auto& r : isolate_real_roots_with_multiplicity(p)) out.push_back(std::move(r.root));
  return out;
}

}  // namespace qpoly::exact
