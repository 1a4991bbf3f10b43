#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bb {

// Exact arbitrary-precision scalars. All coefficient arithmetic in the
// library is exact; there is no floating point anywhere in the pipeline.
// mpq_class keeps values canonical (gcd(num, den) = 1, den > 0) under
// arithmetic; the factory functions below canonicalize explicitly so that
// every Rational in the library satisfies the invariant by construction.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to canonical form. Throws bb::error on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "a" or "a/b" with optional sign, arbitrary-precision digits.
Rational parse_rational(std::string_view text);

// "a" when den == 1, otherwise "a/b".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

} // namespace bb
