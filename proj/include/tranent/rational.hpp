#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tranent {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (gcd(|num|, den) = 1, den > 0) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading '-') exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" for integers.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);

/// 2^e for any integer exponent.
Rational pow2(long e);

/// Largest integer e with 2^e <= q, for q > 0.
long floor_log2(const Rational& q);

Rational pow(const Rational& base, unsigned long e);

/// Doubles bracketing q: to_double_down(q) <= q <= to_double_up(q).
double to_double_down(const Rational& q);
double to_double_up(const Rational& q);
double to_double(const Rational& q);

/// Exact rational value of a finite double.
Rational from_double(double d);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tranent
