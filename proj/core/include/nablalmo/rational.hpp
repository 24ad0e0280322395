#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nablalmo {

/// Arbitrary precision rational in lowest terms with positive denominator.
/// GMP keeps mpq_class canonical after every arithmetic operation; the
/// helpers below keep it canonical on construction from text.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "-3", "+2", "1/2", "-7/5760". Throws ParseError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// value^exponent for any integer exponent; throws MathError on 0^negative.
Rational power(const Rational& value, long exponent);

Rational factorial(unsigned n);

}  // namespace nablalmo
