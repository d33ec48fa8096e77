#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sweff {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "int" or "int/int" (optional leading sign, no whitespace).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace sweff
