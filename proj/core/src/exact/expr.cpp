#include "qpoly/exact/expr.hpp"

#include <optional>

#include "qpoly/errors.hpp"

namespace qpoly::exact {

struct Expr::Node {
  enum Kind { kRational, kAlgebraic, kReal, kAdd, kSub, kMul, kDiv, kNeg } kind;
  Rational q;
  AlgebraicReal a;
  Real r;
  std::shared_ptr<const Node> lhs, rhs;
};

Expr::Expr(const Rational& q) : n_(std::make_shared<Node>(Node{Node::kRational, q, {}, {}, nullptr, nullptr})) {}

Expr::Expr(const AlgebraicReal& a) {
  if (a.is_rational()) {
    n_ = std::make_shared<Node>(Node{Node::kRational, a.rational_value(), {}, {}, nullptr, nullptr});
  } else {
    n_ = std::make_shared<Node>(Node{Node::kAlgebraic, 0, a, {}, nullptr, nullptr});
  }
}

Expr::Expr(const Real& r) {
  if (r.is_rational()) {
    n_ = std::make_shared<Node>(Node{Node::kRational, r.rational(), {}, {}, nullptr, nullptr});
  } else {
    n_ = std::make_shared<Node>(Node{Node::kReal, 0, {}, r, nullptr, nullptr});
  }
}

namespace {

std::shared_ptr<const Expr::Node> make(int kind, std::shared_ptr<const Expr::Node> l, std::shared_ptr<const Expr::Node> r) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = static_cast<Expr::Node::Kind>(kind);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(Expr::Node::kAdd, a.n_, b.n_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(Expr::Node::kSub, a.n_, b.n_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(Expr::Node::kMul, a.n_, b.n_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make(Expr::Node::kDiv, a.n_, b.n_)); }
Expr Expr::operator-() const { return Expr(make(Node::kNeg, n_, nullptr)); }

Interval Expr::enclose(int bits) const {
  switch (n_->kind) {
    case Node::kRational:
      return Interval::point(n_->q);
    case Node::kAlgebraic:
      return n_->a.refined_bits(bits).interval();
    case Node::kReal:
      return n_->r.enclose(bits);
    case Node::kAdd:
      return Expr(n_->lhs).enclose(bits) + Expr(n_->rhs).enclose(bits);
    case Node::kSub:
      return Expr(n_->lhs).enclose(bits) - Expr(n_->rhs).enclose(bits);
    case Node::kMul:
      return Expr(n_->lhs).enclose(bits) * Expr(n_->rhs).enclose(bits);
    case Node::kDiv:
      return Expr(n_->lhs).enclose(bits) / Expr(n_->rhs).enclose(bits);
    case Node::kNeg:
      return -Expr(n_->lhs).enclose(bits);
  }
  throw DomainError("bad expression node");
}

void Expr::collect(std::vector<AlgebraicReal>& algebraic) const {
  if (n_->kind == Node::kAlgebraic) algebraic.push_back(n_->a);
  if (n_->lhs) Expr(n_->lhs).collect(algebraic);
  if (n_->rhs) Expr(n_->rhs).collect(algebraic);
}

Real Expr::evaluate(const std::vector<Real>& algebraic, std::size_t& next) const {
  switch (n_->kind) {
    case Node::kRational:
      return Real(n_->q);
    case Node::kAlgebraic:
      return algebraic[next++];
    case Node::kReal:
      return n_->r;
    case Node::kNeg:
      return -Expr(n_->lhs).evaluate(algebraic, next);
    default:
      break;
  }
  Real l = Expr(n_->lhs).evaluate(algebraic, next);
  Real r = Expr(n_->rhs).evaluate(algebraic, next);
  switch (n_->kind) {
    case Node::kAdd:
      return l + r;
    case Node::kSub:
      return l - r;
    case Node::kMul:
      return l * r;
    case Node::kDiv:
      return l / r;
    default:
      throw DomainError("bad expression node");
  }
}

Real Expr::value() const {
  std::vector<AlgebraicReal> leaves;
  collect(leaves);
  std::vector<Real> placed = to_reals(leaves);
  std::size_t next = 0;
  return evaluate(placed, next);
}

int Expr::sign() const {
  if (n_->kind == Node::kRational) return sgn(n_->q);
  for (int bits : {32, 64, 128, 256}) {
    try {
      auto s = enclose(bits).sign();
      if (s && *s != 0) return *s;
    } catch (const DomainError&) {
      // A divisor enclosure still straddles zero.
    }
  }
  return value().sign();
}

namespace {

// Leaves compare as algebraic numbers; avoids a compositum of their fields.
std::optional<AlgebraicReal> leaf(const Expr::Node& n) {
  switch (n.kind) {
    case Expr::Node::kRational: return AlgebraicReal(n.q);
    case Expr::Node::kAlgebraic: return n.a;
    case Expr::Node::kReal: return n.r.to_algebraic();
    default: return std::nullopt;
  }
}

}  // namespace

int compare(const Expr& a, const Expr& b) {
  if (a.n_->kind == Expr::Node::kRational && b.n_->kind == Expr::Node::kRational) return sgn(a.n_->q - b.n_->q);
  auto la = leaf(*a.n_);
  auto lb = la ? leaf(*b.n_) : std::nullopt;
  if (la && lb) return compare(*la, *lb);
  return (a - b).sign();
}

}  // namespace qpoly::exact
