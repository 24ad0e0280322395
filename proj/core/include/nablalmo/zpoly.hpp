#pragma once

#include <vector>

#include "nablalmo/half_laurent.hpp"
#include "nablalmo/rational.hpp"

namespace nablalmo {

/// A polynomial z^s * (b_0 + b_1 z^2 + ... + b_m z^(2m)) in the Conway
/// variable z = t^(1/2) - t^(-1/2). Trailing zero coefficients are trimmed,
/// so the zero polynomial has an empty coefficient list.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(std::vector<Rational> coeffs, int prefactor_exponent = 0);

  int prefactor_exponent() const noexcept { return prefactor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// b_k, zero past the end.
  Rational coeff(std::size_t k) const;
  /// Coefficient of z^e in the expanded polynomial.
  Rational z_coeff(int e) const;
  /// Highest power of z with nonzero coefficient; -1 for zero.
  int z_degree() const;
  /// Value at z = 0, i.e. at t = 1.
  Rational value_at_zero() const;

  /// Expansion under z = t^(1/2) - t^(-1/2).
  HalfLaurent expand() const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    return a.prefactor_ == b.prefactor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  int prefactor_ = 0;
};

/// z^n expanded as a HalfLaurent.
HalfLaurent z_power(unsigned n);

/// The unique ZPoly with prefactor z^prefactor_exponent whose expansion is
/// `p`, found by eliminating the top power of t^(1/2) against z^(s+2k).
/// Throws MathError when p is not in z^s Q[z^2].
ZPoly rewrite_in_z(const HalfLaurent& p, int prefactor_exponent);

}  // namespace nablalmo
