#pragma once

#include <gmpxx.h>

#include <string>

namespace qgw {

/* Arbitrary-precision rational, always in canonical lowest terms with a
 * positive denominator (GMP keeps arithmetic results canonical; the helpers
 * below canonicalize on construction and parse). */
using Rational = mpq_class;

/* num/den in lowest terms; den must be nonzero. */
Rational rational(long num, long den = 1);

/* Canonical decimal string: "p/q" in lowest terms, "p" when q = 1, the sign
 * on the numerator only. */
std::string to_string(const Rational& value);

/* Inverse of to_string. Accepts an optional leading '-', a decimal numerator
 * and an optional "/denominator" part. Throws std::invalid_argument on
 * malformed text or a zero denominator. */
Rational parse_rational(const std::string& text);

/* binom(top, bottom) as an exact Rational; zero when bottom > top. */
Rational binomial(unsigned long top, unsigned long bottom);

/* base^exponent for integer exponents (negative inverts; base must be
 * nonzero then). */
Rational pow_int(const Rational& base, long exponent);

} // namespace qgw
