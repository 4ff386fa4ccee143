#pragma once

#include <gmpxx.h>

#include <string>

namespace mukai {

// Every scalar in the library is an exact arbitrary-precision rational.
// The case analyses turn on strict inequalities with margins as small as
// 1/(4s), so nothing is ever rounded.
using Rational = mpq_class;

// Canonicalized p/q. den must be nonzero.
Rational make_rational(long long num, long long den = 1);

// gmpxx has no long long overloads; funnel every integer through here.
inline Rational rat(long long v) { return Rational(static_cast<long>(v)); }
inline mpz_class zint(long long v) { return mpz_class(static_cast<long>(v)); }

// Accepts "p", "-p", "p/q", "-p/q" in base 10. Throws DomainError(ParseError)
// on anything else (including q == 0).
Rational parse_rational(const std::string& text);

// Canonical "p/q" rendering, denominator always spelled out ("16" -> "16/1").
std::string fraction_str(const Rational& q);

bool is_integer(const Rational& q);

// Pre: is_integer(q) and the value fits in long long.
long long to_integer(const Rational& q);

// floor(q) as an exact integer (fits-in-long-long expected at desk scale).
long long floor_to_int(const Rational& q);

// Fixed six-decimal rendering with exact round-half-away-from-zero, used by
// the SVG emitter. Deterministic: "3/16" -> "0.187500".
std::string decimal6(const Rational& q);

} // namespace mukai
