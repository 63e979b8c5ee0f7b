#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alginv {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive denominator)
/// after every arithmetic operation; make_rational canonicalizes explicit fractions.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p" or "p/q" (optional leading sign). Throws InputError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace alginv
