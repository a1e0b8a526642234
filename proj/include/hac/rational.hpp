#ifndef HAC_RATIONAL_HPP
#define HAC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hac {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (lowest terms, positive denominator) under arithmetic; every
/// construction path below canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p/q" or "n" (optionally signed). Throws Error{ParseError}.
Rational parse_rational(const std::string& text);

/// Lowest-terms "p/q" (or "n" when the denominator is 1).
std::string to_fraction_string(const Rational& q);

/// Decimal rendering at 12 significant digits, round-half-even,
/// trailing zeros trimmed. Purely presentational.
std::string to_decimal_string(const Rational& q);

/// floor(q) as an Integer.
Integer rat_floor(const Rational& q);

/// 2^k for possibly negative k.
Rational pow2(long k);

/// b^k for k >= 0.
Rational rat_pow(const Rational& b, unsigned long k);

}  // namespace hac

#endif
