#include "qpoly/exact/sturm.hpp"

#include "int_poly.hpp"
#include "qpoly/errors.hpp"

namespace qpoly::exact {

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<RationalPoly> chain{p};
  RationalPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    RationalPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

template <class SignFn>
int count_variations(std::size_t n, SignFn sign_of) {
  int last = 0, v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int s = sign_of(i);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& t) {
  return count_variations(chain.size(), [&](std::size_t i) { return chain[i].sign_at(t); });
}

int sign_variations_at_infinity(const std::vector<RationalPoly>& chain, bool positive) {
  return count_variations(chain.size(), [&](std::size_t i) {
    int s = sgn(chain[i].leading());
    if (!positive && chain[i].degree() % 2 == 1) s = -s;
    return s;
  });
}

SturmSequence::SturmSequence(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  using detail::IntPoly;
  IntPoly a = detail::scaled_int(p);
  chain_.push_back(a);
  IntPoly b = detail::derivative(a);
  detail::remove_content(b);
  if (b.empty()) return;
  chain_.push_back(b);
  while (true) {
    const IntPoly& x = chain_[chain_.size() - 2];
    const IntPoly& y = chain_.back();
    IntPoly r = detail::prem(x, y);
    if (r.empty()) break;
    // prem = lc(y)^(dx-dy+1) * rem; we want a positive multiple of -rem.
    const int e = static_cast<int>(x.size()) - static_cast<int>(y.size()) + 1;
    bool flip = !(sgn(y.back()) < 0 && e % 2 == 1);
    if (flip) {
      for (auto& v : r) v = -v;
    }
    detail::remove_content(r);
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& t) const {
  return count_variations(chain_.size(), [&](std::size_t i) { return detail::sign_at(chain_[i], t); });
}

int SturmSequence::variations_at_infinity(bool positive) const {
  return count_variations(chain_.size(), [&](std::size_t i) {
    int s = sgn(chain_[i].back());
    if (!positive && (chain_[i].size() - 1) % 2 == 1) s = -s;
    return s;
  });
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
  if (b < a) return 0;
  int inner = a == b ? 0 : count_half_open(a, b);
  return inner + (sign_of_base_at(a) == 0 ? 1 : 0);
}

int SturmSequence::count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int SturmSequence::sign_of_base_at(const Rational& t) const { return detail::sign_at(chain_.front(), t); }

Rational cauchy_bound(const RationalPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  const Rational& l = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / l);
    if (r > m) m = r;
  }
  return 1 + m;
}

}  // namespace qpoly::exact
