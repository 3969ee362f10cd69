#pragma once

#include <gmpxx.h>

#include <string>

namespace grnet {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator), which makes operator== a true value comparison.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. den must be nonzero.
Rational frac(long num, long den = 1);

/// Parses "p" or "p/q" with optional leading '-'. Throws ParseError on
/// malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace grnet
