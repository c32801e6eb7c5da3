#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subdiv {

/// Arbitrary precision rational; always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q", integers, and decimals with an optional exponent
/// ("0.125", "-1.5e-3") into an exact rational. Throws Error(parse).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1. Round-trips through parse_rational.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational abs(const Rational& value);

/// num/den in canonical form (den != 0).
Rational ratio(long num, long den);

/// Exact binomial coefficient.
Rational binomial(int n, int k);

}  // namespace subdiv
