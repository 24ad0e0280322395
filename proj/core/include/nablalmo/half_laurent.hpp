#pragma once

#include <map>

#include "nablalmo/rational.hpp"

namespace nablalmo {

/// Laurent polynomial in s = t^(1/2) with rational coefficients. Exponents
/// are stored as integer powers of s, so t^(3/2) has key 3 and t^-1 key -2.
/// Zero coefficients are never stored.
class HalfLaurent {
 public:
  using Terms = std::map<int, Rational>;

  HalfLaurent() = default;
  HalfLaurent(const Rational& constant);  // NOLINT: implicit scalar embedding
  HalfLaurent(int constant) : HalfLaurent(Rational(constant)) {}  // NOLINT

  /// c * s^half_exponent.
  static HalfLaurent monomial(int half_exponent, const Rational& c = 1);
  /// s = t^(1/2).
  static HalfLaurent t_half() { return monomial(1); }
  /// t = s^2.
  static HalfLaurent t() { return monomial(2); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(int half_exponent) const;
  /// Smallest / largest stored power of s. Undefined for the zero polynomial.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Value at s = v. Throws MathError for v = 0 when negative powers occur.
  Rational evaluate(const Rational& v) const;

  /// The ring involution s -> -1/s, i.e. s^k -> (-1)^k s^-k.
  HalfLaurent involution() const;

  /// Multiplication by s^k.
  HalfLaurent shifted(int half_exponent) const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent c = a;
    return c *= b;
  }
  friend HalfLaurent operator-(const HalfLaurent& a) { return HalfLaurent{} - a; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  HalfLaurent pow(unsigned n) const;

 private:
  void add_term(int k, const Rational& c);

  Terms terms_;
};

}  // namespace nablalmo
