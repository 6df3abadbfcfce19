// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace cnt {

/// Exact rational number. GMP keeps values in lowest terms with a positive
/// denominator, so equality and sign tests are decidable everywhere.
using Rational = mpq_class;

/// Parses "p/q" or a plain integer string. Rejects anything else, including
/// zero denominators and embedded whitespace.
Rational parse_rational(const std::string& text);

/// Renders in lowest terms: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
/// Display only; never feeds back into computation.
std::string to_decimal(const Rational& value, int significant_digits);

/// value^exponent for a non-negative integer exponent.
Rational rational_pow(const Rational& value, unsigned long exponent);

}  // namespace cnt
