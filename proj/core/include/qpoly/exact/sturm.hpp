#pragma once

#include <vector>

#include "qpoly/exact/polynomial.hpp"
#include "qpoly/exact/rational.hpp"

namespace qpoly::exact {

/// Canonical Sturm sequence p, p', -rem(p, p'), ... over Q.
/// Throws DomainError for the zero polynomial.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Sign variations of a chain at t (zeros skipped).
int sign_variations(const std::vector<RationalPoly>& chain, const Rational& t);

/// Sign variations at +infinity (`positive`) or -infinity.
int sign_variations_at_infinity(const std::vector<RationalPoly>& chain, bool positive);

/// Sturm sequence with every member scaled to a content-free integer
/// polynomial by a positive factor; signs at every point match the
/// canonical chain. Used for root counting.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p);

  int variations(const Rational& t) const;
  int variations_at_infinity(bool positive) const;
  /// Distinct real roots of the square-free part in (a, b].
  int count_half_open(const Rational& a, const Rational& b) const;
  /// Distinct real roots in the closed interval [a, b].
  int count_closed(const Rational& a, const Rational& b) const;
  /// All distinct real roots.
  int count_all() const;
  int sign_of_base_at(const Rational& t) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Cauchy bound 1 + max|c_i| / |c_lead|: every root has smaller modulus.
Rational cauchy_bound(const RationalPoly& p);

}  // namespace qpoly::exact
