#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/interval.hpp"
#include "qpoly/exact/polynomial.hpp"

namespace qpoly::exact {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(gamma) for a real algebraic gamma, represented by a square-free
/// modulus N with N(gamma) = 0 and an isolating interval for gamma.
///
/// N need not be irreducible. An element is a polynomial e of degree below
/// deg N and stands for the real number e(gamma); zero tests ask whether
/// gamma is a root of gcd(e, N). Each split discovered that way replaces N
/// by the factor that keeps gamma, so the modulus only ever shrinks and
/// every previously reduced element remains a valid representative. The
/// modulus and interval are caches guarded by a mutex; the represented
/// numbers never change.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Q(a) for an irrational a; the modulus is a's defining polynomial.
  static FieldPtr create(const AlgebraicReal& a);

  std::uint64_t id() const { return id_; }
  RationalPoly modulus() const;
  int degree() const;
  /// gamma with the current modulus and interval.
  AlgebraicReal generator() const;

  RationalPoly reduce(const RationalPoly& e) const;
  RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) const;
  /// Throws DomainError when e(gamma) = 0.
  RationalPoly inverse(const RationalPoly& e) const;
  bool is_zero(const RationalPoly& e) const;
  int sign(const RationalPoly& e) const;
  /// Encloses e(gamma) after refining gamma to width 2^-bits.
  Interval enclose(const RationalPoly& e, int bits) const;

  /// Q(gamma, gamma') as a new field together with the images of both
  /// generators. Cached per pair.
  struct Compositum {
    FieldPtr field;
    RationalPoly first;   // this field's generator
    RationalPoly second;  // other's generator
  };
  Compositum compositum(const FieldPtr& other) const;

  /// Polynomial over this field in x, coefficients are element reps.
  using Poly = std::vector<RationalPoly>;

  /// Monic gcd in K[x]; leading coefficients are trimmed by exact zero tests.
  Poly poly_gcd(Poly a, Poly b) const;
  /// Horner evaluation of a K-polynomial at an element.
  RationalPoly poly_eval(const Poly& p, const RationalPoly& at) const;
  /// Image of e(gamma) under gamma -> `image` (an element of `target`).
  static RationalPoly transport(const RationalPoly& e, const NumberField& target, const RationalPoly& image);

  NumberField(RationalPoly modulus, Rational lo, Rational hi);

 private:
  void shrink_locked(const RationalPoly& factor) const;
  bool is_zero_locked(const RationalPoly& e) const;
  void bisect_locked() const;
  Interval enclose_locked(const RationalPoly& e) const;
  void trim_poly(Poly& p) const;

  std::uint64_t id_;
  mutable std::recursive_mutex mu_;
  mutable RationalPoly mod_;
  mutable Rational lo_, hi_;
  mutable std::map<std::uint64_t, Compositum> composita_;
};

/// A single field containing every given number, with each number's
/// representative. Roots of a common polynomial are recognized inside the
/// field already built (by dividing out the roots already present) before
/// any new generator is adjoined. `field` is null when all are rational.
struct CommonField {
  FieldPtr field;
  std::vector<RationalPoly> reps;
};
CommonField common_field(const std::vector<AlgebraicReal>& numbers);

/// Remaining refinement steps for sign decisions, read once from
/// QPOLY_REFINE_BUDGET (unlimited when unset). Exhaustion throws
/// BudgetExceeded.
void consume_refinement_budget(long steps = 1);
void set_refinement_budget(long steps);

}  // namespace qpoly::exact
