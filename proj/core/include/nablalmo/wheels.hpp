#pragma once

#include <compare>
#include <map>
#include <vector>

#include "nablalmo/hseries.hpp"
#include "nablalmo/rational.hpp"

namespace nablalmo {

/// The even wheel ω_{2n}, named by its half index n >= 1. Odd wheels vanish
/// in the algebra and cannot be named. ω_{2n} has degree 2n.
class EvenWheel {
 public:
  /// Throws std::invalid_argument for n < 1.
  explicit EvenWheel(int half_index);

  /// ω_{legs}; throws std::invalid_argument for odd or non-positive legs.
  static EvenWheel with_legs(int legs);

  int half_index() const noexcept { return n_; }
  int legs() const noexcept { return 2 * n_; }
  int degree() const noexcept { return 2 * n_; }

  friend auto operator<=>(const EvenWheel&, const EvenWheel&) = default;
  friend bool operator==(const EvenWheel&, const EvenWheel&) = default;

 private:
  int n_;
};

/// exp(sum a_{2n} ω_{2n}) truncated at degree `order`: stores 2n -> a_{2n}
/// for 2n <= order, without zero entries.
class WheelSeries {
 public:
  explicit WheelSeries(int order = kDefaultOrder);

  int order() const noexcept { return order_; }
  const std::map<EvenWheel, Rational>& coefficients() const noexcept { return coeffs_; }
  /// a_{2n}, zero when absent.
  Rational coeff(EvenWheel w) const;
  /// Throws std::invalid_argument when the wheel's degree exceeds the order.
  void set(EvenWheel w, const Rational& a);

  friend bool operator==(const WheelSeries&, const WheelSeries&) = default;

 private:
  int order_;
  std::map<EvenWheel, Rational> coeffs_;
};

/// A polynomial in the commuting even wheels, as multisets of wheels.
class WheelPolynomial {
 public:
  using Monomial = std::vector<EvenWheel>;  // sorted
  using Terms = std::map<Monomial, Rational>;

  WheelPolynomial() = default;
  static WheelPolynomial constant(const Rational& c);
  static WheelPolynomial monomial(Monomial m, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff({}); }

  void add_term(Monomial m, const Rational& c);
  WheelPolynomial truncated(int max_degree) const;

  WheelPolynomial& operator+=(const WheelPolynomial& o);
  friend WheelPolynomial operator+(WheelPolynomial a, const WheelPolynomial& b) { return a += b; }
  friend WheelPolynomial operator-(WheelPolynomial a, const WheelPolynomial& b);
  friend WheelPolynomial operator*(const WheelPolynomial& a, const WheelPolynomial& b);
  friend WheelPolynomial operator*(const Rational& s, const WheelPolynomial& a);
  friend bool operator==(const WheelPolynomial& a, const WheelPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

int degree(const WheelPolynomial::Monomial& m);

/// exp(p) truncated at total degree `order`. Requires zero constant term.
WheelPolynomial wheel_exp(const WheelPolynomial& p, int order);
/// log(u) truncated at total degree `order`. Requires constant term 1.
WheelPolynomial wheel_log(const WheelPolynomial& u, int order);

/// The multiplicative weight system ω_{2n} -> -2 h^(2n).
HSeries w_nabla(const WheelPolynomial& p, int order);
/// exp(sum a_{2n} (-2 h^(2n))) to the given order.
HSeries w_nabla(const WheelSeries& w, int order);
inline HSeries w_nabla(const WheelSeries& w) { return w_nabla(w, w.order()); }

/// Inverse of w_nabla on wheel series: a_{2n} = -1/2 [h^(2n)] log f.
/// Throws MathError unless f(0) = 1 and log f is even.
WheelSeries wheels_from_series(const HSeries& f);

/// Multiplies a diagram of degree m by r^m: a_{2n} -> r^(2n) a_{2n}.
WheelSeries rescale_degree(const WheelSeries& w, const Rational& r);
/// The matching operation on h-series, h -> r h.
HSeries rescale_degree(const HSeries& f, const Rational& r);

/// Wheel exponents of a disjoint union: coefficients add.
WheelSeries disjoint_union(const WheelSeries& a, const WheelSeries& b);

/// "exp( 1/48 w2 - 1/5760 w4 )"; "exp( 0 )" when empty.
std::string to_string(const WheelSeries& w);
std::string to_string(const WheelPolynomial& p);

}  // namespace nablalmo
