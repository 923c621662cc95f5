#include "qpoly/exact/number_field.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "qpoly/errors.hpp"
#include "qpoly/exact/sturm.hpp"

namespace qpoly::exact {

namespace {

std::atomic<std::uint64_t> next_field_id{1};

std::atomic<long>& budget() {
  static std::atomic<long> remaining = [] {
    const char* env = std::getenv("QPOLY_REFINE_BUDGET");
    if (env == nullptr || *env == '\0') return -1L;
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      return -1L;
    }
  }();
  return remaining;
}

}  // namespace

void set_refinement_budget(long steps) { budget().store(steps); }

void consume_refinement_budget(long steps) {
  auto& b = budget();
  if (b.load() < 0) return;
  if (b.fetch_sub(steps) - steps < 0) {
    b.store(0);
    throw BudgetExceeded("refinement budget exhausted before a sign could be certified");
  }
}

NumberField::NumberField(RationalPoly modulus, Rational lo, Rational hi)
    : id_(next_field_id++), mod_(modulus.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mod_.degree() < 2) throw DomainError("number field modulus must have degree at least 2");
}

FieldPtr NumberField::create(const AlgebraicReal& a) {
  if (a.is_rational()) throw DomainError("cannot build a number field from a rational generator");
  return std::make_shared<NumberField>(a.poly(), a.lo(), a.hi());
}

RationalPoly NumberField::modulus() const {
  std::lock_guard lock(mu_);
  return mod_;
}

int NumberField::degree() const {
  std::lock_guard lock(mu_);
  return mod_.degree();
}

AlgebraicReal NumberField::generator() const {
  std::lock_guard lock(mu_);
  return AlgebraicReal(mod_, lo_, hi_);
}

RationalPoly NumberField::reduce(const RationalPoly& e) const {
  std::lock_guard lock(mu_);
  if (e.degree() < mod_.degree()) return e;
  return e % mod_;
}

RationalPoly NumberField::multiply(const RationalPoly& a, const RationalPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() == 0) return b * a.leading();
  if (b.degree() == 0) return a * b.leading();
  return reduce(a * b);
}

void NumberField::shrink_locked(const RationalPoly& factor) const { mod_ = factor.primitive(); }

void NumberField::bisect_locked() const {
  Rational mid = (lo_ + hi_) / 2;
  const int sm = mod_.sign_at(mid);
  if (sm == 0) throw DomainError("number field generator hit a rational midpoint");
  if (sm == mod_.sign_at(lo_)) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

Interval NumberField::enclose_locked(const RationalPoly& e) const { return evaluate(e, Interval{lo_, hi_}); }

bool NumberField::is_zero_locked(const RationalPoly& e0) const {
  RationalPoly e = e0.degree() < mod_.degree() ? e0 : e0 % mod_;
  if (e.is_zero()) return true;
  if (e.degree() == 0) return false;
  auto s = enclose_locked(e).sign();
  if (s && *s != 0) return false;
  RationalPoly g = gcd(e, mod_);
  if (g.degree() < 1) return false;
  SturmSequence chain(g);
  if (chain.count_half_open(lo_, hi_) == 1) {
    shrink_locked(g);
    return true;
  }
  shrink_locked(mod_ / g);
  return false;
}

bool NumberField::is_zero(const RationalPoly& e) const {
  std::lock_guard lock(mu_);
  return is_zero_locked(e);
}

RationalPoly NumberField::inverse(const RationalPoly& e0) const {
  std::lock_guard lock(mu_);
  if (is_zero_locked(e0)) throw DomainError("division by zero in number field");
  while (true) {
    RationalPoly e = e0 % mod_;
    ExtendedGcd eg = extended_gcd(e, mod_);
    if (eg.g.degree() == 0) return (eg.s * (Rational(1) / eg.g.leading())) % mod_;
    // gamma is not a root of g, since e(gamma) != 0.
    shrink_locked(mod_ / eg.g);
  }
}

int NumberField::sign(const RationalPoly& e0) const {
  std::lock_guard lock(mu_);
  if (e0.degree() == 0) return sgn(e0.leading());
  if (is_zero_locked(e0)) return 0;
  RationalPoly e = e0 % mod_;
  if (e.degree() == 0) return sgn(e.leading());
  while (true) {
    auto s = enclose_locked(e).sign();
    if (s && *s != 0) return *s;
    consume_refinement_budget();
    bisect_locked();
  }
}

Interval NumberField::enclose(const RationalPoly& e, int bits) const {
  std::lock_guard lock(mu_);
  Rational w = 1;
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  while (hi_ - lo_ > w) bisect_locked();
  return enclose_locked(e.degree() < mod_.degree() ? e : e % mod_);
}

void NumberField::trim_poly(Poly& p) const {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

NumberField::Poly NumberField::poly_gcd(Poly a, Poly b) const {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    RationalPoly inv = inverse(b.back());
    while (a.size() >= b.size()) {
      RationalPoly q = multiply(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] = reduce(a[shift + i] - multiply(q, b[i]));
      a.pop_back();
      trim_poly(a);
    }
    std::swap(a, b);
  }
  if (a.empty()) return a;
  RationalPoly inv = inverse(a.back());
  for (auto& c : a) c = multiply(c, inv);
  a.back() = RationalPoly::constant(1);
  return a;
}

RationalPoly NumberField::poly_eval(const Poly& p, const RationalPoly& at) const {
  RationalPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = reduce(multiply(acc, at) + p[i]);
  return acc;
}

RationalPoly NumberField::transport(const RationalPoly& e, const NumberField& target, const RationalPoly& image) {
  RationalPoly acc;
  const auto& c = e.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = target.reduce(target.multiply(acc, image) + RationalPoly::constant(c[i]));
  return acc;
}

NumberField::Compositum NumberField::compositum(const FieldPtr& other) const {
  if (other->id() == id_) return {shared_from_this(), RationalPoly::x(), RationalPoly::x()};
  {
    std::lock_guard lock(mu_);
    auto it = composita_.find(other->id());
    if (it != composita_.end()) return it->second;
  }
  AlgebraicReal g1 = generator();
  AlgebraicReal g2 = other->generator();
  const RationalPoly& n1 = g1.poly();
  const RationalPoly& n2 = g2.poly();
  const int d = n1.degree() * n2.degree();

  // N(y) = Res_x(N1(x), N2(y - s x)) is square-free for all but finitely
  // many s; then y = gamma2 + s gamma1 generates both.
  RationalPoly big;
  Rational s = 0;
  for (int attempt = 1;; ++attempt) {
    s = (attempt % 2 == 1) ? Rational((attempt + 1) / 2) : Rational(-(attempt / 2));
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= d; ++k) {
      Rational y = k;
      xs.push_back(y);
      ys.push_back(resultant(n1, n2.compose(RationalPoly{y, -s})));
    }
    big = interpolate(xs, ys).primitive();
    if (big.degree() == d && gcd(big, big.derivative()).degree() == 0) break;
  }
  SturmSequence chain(big);
  while (true) {
    Interval gi = g2.interval() + Interval::point(s) * g1.interval();
    if (big.sign_at(gi.lo) != 0 && big.sign_at(gi.hi) != 0 && chain.count_half_open(gi.lo, gi.hi) == 1) {
      auto field = std::make_shared<NumberField>(big, gi.lo, gi.hi);
      // gamma1 is the only common root of N1(x) and N2(gamma - s x).
      Poly a;
      for (const auto& c : n1.coeffs()) a.push_back(RationalPoly::constant(c));
      Poly b{RationalPoly::constant(n2.leading())};
      const Poly lin{RationalPoly::x(), RationalPoly::constant(-s)};
      for (int k = n2.degree(); k-- > 0;) {
        Poly next(b.size() + 1);
        for (std::size_t i = 0; i < b.size(); ++i) {
          next[i] = field->reduce(next[i] + field->multiply(b[i], lin[0]));
          next[i + 1] = field->reduce(next[i + 1] + b[i] * lin[1].leading());
        }
        next[0] = next[0] + RationalPoly::constant(n2.coeff(k));
        b = std::move(next);
      }
      Poly g = field->poly_gcd(std::move(a), std::move(b));
      if (g.size() != 2) throw DomainError("compositum: generator gcd is not linear");
      RationalPoly first = field->reduce(-g[0]);
      RationalPoly second = field->reduce(RationalPoly::x() - first * s);
      Compositum out{field, first, second};
      std::lock_guard lock(mu_);
      composita_.emplace(other->id(), out);
      return out;
    }
    g1 = g1.bisected();
    g2 = g2.bisected();
  }
}

CommonField common_field(const std::vector<AlgebraicReal>& numbers) {
  CommonField out;
  out.reps.resize(numbers.size());
  std::vector<std::size_t> placed;  // irrational, pairwise distinct
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    const AlgebraicReal& a = numbers[i];
    if (a.is_rational()) {
      out.reps[i] = RationalPoly::constant(a.rational_value());
      continue;
    }
    bool duplicate = false;
    for (std::size_t j : placed) {
      if (compare(numbers[j], a) == 0) {
        out.reps[i] = out.reps[j];
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    if (!out.field) {
      out.field = NumberField::create(a);
      out.reps[i] = RationalPoly::x();
      placed.push_back(i);
      continue;
    }
    const NumberField& k = *out.field;
    // Divide a's polynomial by (x - r) for its roots r already in the field.
    NumberField::Poly q;
    for (const auto& c : a.poly().coeffs()) q.push_back(RationalPoly::constant(c));
    for (std::size_t j : placed) {
      if (!(numbers[j].poly() == a.poly())) continue;
      NumberField::Poly quot(q.size() - 1);
      RationalPoly carry;
      for (std::size_t t = q.size(); t-- > 1;) {
        carry = k.reduce(q[t] + k.multiply(carry, out.reps[j]));
        quot[t - 1] = carry;
      }
      q = std::move(quot);
    }
    if (q.size() == 2) {
      out.reps[i] = k.reduce(-k.multiply(q[0], k.inverse(q[1])));
      placed.push_back(i);
      continue;
    }
    auto comp = k.compositum(NumberField::create(a));
    const NumberField& big = *comp.field;
    for (std::size_t j : placed) out.reps[j] = NumberField::transport(out.reps[j], big, comp.first);
    out.reps[i] = comp.second;
    if (static_cast<int>(q.size()) - 1 < a.poly().degree()) {
      NumberField::Poly moved;
      for (const auto& c : q) moved.push_back(NumberField::transport(c, big, comp.first));
      if (!big.is_zero(big.poly_eval(moved, comp.second))) throw DomainError("common field: root relation failed");
    }
    out.field = comp.field;
    placed.push_back(i);
  }
  return out;
}

}  // namespace qpoly::exact
