#include "qpoly/exact/real.hpp"

#include <sstream>

#include "qpoly/errors.hpp"
#include "qpoly/exact/matrix.hpp"

namespace qpoly::exact {

Real::Real(const FieldPtr& field, RationalPoly rep) : field_(field), rep_(std::move(rep)) { normalize(); }

Real Real::from_algebraic(const AlgebraicReal& a) {
  if (a.is_rational()) return Real(a.rational_value());
  return Real(NumberField::create(a), RationalPoly::x());
}

void Real::normalize() {
  if (!field_) return;
  rep_ = field_->reduce(rep_);
  if (rep_.degree() <= 0) {
    q_ = rep_.is_zero() ? Rational(0) : rep_.leading();
    field_.reset();
    rep_ = RationalPoly();
  }
}

const Rational& Real::rational() const {
  if (field_) throw DomainError("real number is not stored as a rational");
  return q_;
}

int Real::sign() const { return field_ ? field_->sign(rep_) : sgn(q_); }

Interval Real::enclose(int bits) const { return field_ ? field_->enclose(rep_, bits) : Interval::point(q_); }

double Real::approx() const {
  if (!field_) return q_.get_d();
  return to_algebraic().approx();
}

void Real::unify(Real& a, Real& b) {
  if (!a.field_ || !b.field_ || a.field_->id() == b.field_->id()) return;
  auto c = a.field_->compositum(b.field_);
  a.rep_ = NumberField::transport(a.rep_, *c.field, c.first);
  b.rep_ = NumberField::transport(b.rep_, *c.field, c.second);
  a.field_ = c.field;
  b.field_ = c.field;
}

Real Real::operator-() const {
  Real r = *this;
  if (r.field_) {
    r.rep_ = -r.rep_;
  } else {
    r.q_ = -r.q_;
  }
  return r;
}

Real& Real::operator+=(const Real& o0) {
  if (!field_ && !o0.field_) {
    q_ += o0.q_;
    return *this;
  }
  Real o = o0;
  if (!field_) {
    field_ = o.field_;
    rep_ = RationalPoly::constant(q_);
  } else if (!o.field_) {
    rep_ += RationalPoly::constant(o.q_);
    normalize();
    return *this;
  }
  unify(*this, o);
  rep_ += o.rep_;
  normalize();
  return *this;
}

Real& Real::operator-=(const Real& o) { return *this += -o; }

Real& Real::operator*=(const Real& o0) {
  if (!field_ && !o0.field_) {
    q_ *= o0.q_;
    return *this;
  }
  if (!o0.field_) {
    rep_ *= o0.q_;
    normalize();
    return *this;
  }
  if (!field_) {
    Rational s = q_;
    *this = o0;
    rep_ *= s;
    normalize();
    return *this;
  }
  Real o = o0;
  unify(*this, o);
  rep_ = field_->multiply(rep_, o.rep_);
  normalize();
  return *this;
}

Real& Real::operator/=(const Real& o0) {
  if (!o0.field_) {
    if (o0.q_ == 0) throw DomainError("division by zero");
    if (!field_) {
      q_ /= o0.q_;
    } else {
      rep_ *= Rational(1) / o0.q_;
      normalize();
    }
    return *this;
  }
  Real inv(o0.field_, o0.field_->inverse(o0.rep_));
  return *this *= inv;
}

AlgebraicReal Real::to_algebraic() const {
  if (!field_) return AlgebraicReal(q_);
  RationalPoly n = field_->modulus();
  const int d = n.degree();
  // Matrix of multiplication by rep on the basis 1, y, ..., y^{d-1}.
  Matrix<Rational> m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  RationalPoly col = field_->reduce(rep_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col.coeff(i);
    col = (col * RationalPoly::x()) % n;
  }
  RationalPoly cp(berkowitz_charpoly(m));
  auto roots = isolate_real_roots(cp);
  // Exactly one candidate root equals the element; separate them by
  // tightening the enclosure until only one root interval meets it.
  for (int bits = 8;; bits *= 2) {
    Interval e = enclose(bits);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const AlgebraicReal r = roots[i].refined_bits(bits);
      if (overlaps(e, r.interval())) hits.push_back(i);
    }
    if (hits.size() == 1) return roots[hits[0]];
    if (hits.empty()) throw DomainError("to_algebraic: no matching root");
    if (bits > 1 << 16) throw DomainError("to_algebraic: failed to separate roots");
  }
}

std::optional<Rational> Real::as_rational() const {
  if (!field_) return q_;
  AlgebraicReal a = to_algebraic();
  if (a.is_rational()) return a.rational_value();
  return std::nullopt;
}

std::string Real::to_string() const {
  if (!field_) return exact::to_string(q_);
  return to_algebraic().to_string();
}

int compare(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational(), b.rational());
  return (a - b).sign();
}

std::vector<Real> to_reals(const std::vector<AlgebraicReal>& numbers) {
  CommonField cf = common_field(numbers);
  std::vector<Real> out;
  out.reserve(numbers.size());
  for (auto& rep : cf.reps) {
    if (cf.field) {
      out.emplace_back(cf.field, rep);
    } else {
      out.emplace_back(rep.is_zero() ? Rational(0) : rep.leading());
    }
  }
  return out;
}

}  // namespace qpoly::exact
