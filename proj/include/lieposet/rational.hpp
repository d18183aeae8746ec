#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lieposet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Always "p/q", as used in matrix dumps and form terms.
std::string to_fraction(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace lieposet
