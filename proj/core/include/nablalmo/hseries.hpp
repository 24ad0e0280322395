#pragma once

#include <vector>

#include "nablalmo/half_laurent.hpp"
#include "nablalmo/rational.hpp"
#include "nablalmo/zpoly.hpp"

namespace nablalmo {

/// Truncation order used when nothing else is requested.
inline constexpr int kDefaultOrder = 16;

/// c_0 + c_1 h + ... + c_D h^D + O(h^(D+1)). The coefficient vector always
/// has exactly D+1 entries; binary operations on series of different orders
/// truncate to the smaller order.
class HSeries {
 public:
  /// The zero series at order D.
  explicit HSeries(int order = kDefaultOrder);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  HSeries(std::vector<Rational> coeffs, int order);

  static HSeries constant(const Rational& c, int order);
  /// c * h^k (zero when k > order).
  static HSeries monomial(int k, const Rational& c, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// [h^m], zero past the order.
  Rational coeff(int m) const;
  Rational constant_term() const { return coeffs_.front(); }
  bool is_zero() const;
  /// True when every odd coefficient vanishes.
  bool is_even() const;

  HSeries truncated(int order) const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const HSeries& o);
  HSeries& operator*=(const Rational& s);

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const HSeries& b) { return a *= b; }
  friend HSeries operator*(const Rational& s, HSeries a) { return a *= s; }
  friend HSeries operator-(const HSeries& a) { return Rational(-1) * a; }
  friend bool operator==(const HSeries& a, const HSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// 1/f. Requires a nonzero constant term.
  HSeries reciprocal() const;
  /// exp(f). Requires a zero constant term.
  HSeries exp() const;
  /// log(f). Requires constant term 1.
  HSeries log() const;
  /// f(r h).
  HSeries rescaled(const Rational& r) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Replaces t^(k/2) by the truncated series of exp(k h / 2).
HSeries substitute_exp(const HalfLaurent& p, int order);

/// h / (e^(h/2) - e^(-h/2)), the reciprocal of 2 sinh(h/2) / h.
HSeries c_series(int order);

/// z^2 under t^(1/2) = e^(h/2), i.e. 2 cosh(h) - 2 = h^2 + h^4/12 + ...
HSeries z_squared_series(int order);

/// Solves g = sum_k b_k (z^2)^k for b_k with z^(2k) <= max_z_degree, using
/// that (z^2)^k starts at h^(2k). Throws MathError when g has odd terms or
/// the residual does not vanish to the order of g.
ZPoly series_to_z_poly(const HSeries& g, int max_z_degree);

}  // namespace nablalmo
