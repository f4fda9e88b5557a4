#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace slicekit {

// mpq_class keeps values canonical (reduced, positive denominator) after
// every arithmetic operation. Beware of `auto` with gmpxx expressions: they
// are expression templates that may outlive their operands.
using Rational = mpq_class;
using Integer = mpz_class;

/// Reduced fraction num/den. Throws std::invalid_argument on den == 0.
Rational frac(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts an optional sign, digits, and an optional
/// "/digits" with a non-zero denominator; throws MalformedInput otherwise.
Rational parse_rational(std::string_view text);

/// Bits in numerator plus bits in denominator; the pivot-selection cost.
std::size_t bit_length(const Rational& q);

}  // namespace slicekit
