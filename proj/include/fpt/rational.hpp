#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fpt {

/// Exact arbitrary-precision rational; the default scalar of every exact module.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// value^exponent for a non-negative integer exponent.
Rational pow(const Rational& value, unsigned exponent);

}  // namespace fpt
