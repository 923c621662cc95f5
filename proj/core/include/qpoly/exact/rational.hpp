#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpoly::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Decimal rendering with `digits` significant digits; annotation only.
std::string to_decimal(const Rational& r, int digits = 12);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Floor of a rational as an integer.
Integer floor(const Rational& r);
/// Ceiling of a rational as an integer.
Integer ceil(const Rational& r);

}  // namespace qpoly::exact
