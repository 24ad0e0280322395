#pragma once

#include <string>
#include <string_view>

#include "nablalmo/half_laurent.hpp"
#include "nablalmo/hseries.hpp"
#include "nablalmo/zpoly.hpp"

namespace nablalmo {

// Canonical text forms. Terms appear in ascending exponent order, joined by
// " + " / " - ", with coefficients as reduced fractions and "*" before the
// variable when the coefficient is not +-1:
//   HalfLaurent  "t^-1 - 1 + t", "t^(1/2)", "3/2*t^(-3/2)"
//   ZPoly        "1 + z^2", "z - 2*z^3"
//   HSeries      "1 - 1/24*h^2 + 7/5760*h^4 + O(h^5)"
// The zero polynomial prints as "0"; the zero series as "O(h^(D+1))"
// preceded by "0 + ".

std::string to_string(const HalfLaurent& p);
std::string to_string(const ZPoly& p);
std::string to_string(const HSeries& f);

/// Parses sums of terms "c*t^k", "t^(k/2)", "t^-1", "2t", ... where the only
/// variable is t. Whitespace is ignored.
HalfLaurent parse_half_laurent(std::string_view text);

/// Parses a polynomial in z. All exponents must share one parity, which
/// becomes the prefactor exponent (0 or 1).
ZPoly parse_zpoly(std::string_view text);

/// Parses a polynomial in h with an optional trailing "O(h^N)"; without it
/// the series gets `default_order`. Terms beyond the order are dropped.
HSeries parse_hseries(std::string_view text, int default_order = kDefaultOrder);

}  // namespace nablalmo
