#include <gtest/gtest.h>

#include <random>

#include "nablalmo/errors.hpp"
#include "nablalmo/text.hpp"
#include "nablalmo/wheels.hpp"
#include "oracles.hpp"

namespace nablalmo {
namespace {

WheelPolynomial w(int legs, const Rational& c = 1) { return WheelPolynomial::monomial({EvenWheel::with_legs(legs)}, c); }

WheelPolynomial random_wheel_polynomial(std::mt19937& rng) {
  WheelPolynomial p;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) {
    WheelPolynomial::Monomial m;
    const int size = static_cast<int>(rng() % 3);
    for (int j = 0; j < size; ++j) m.push_back(EvenWheel(1 + static_cast<int>(rng() % 3)));
    std::sort(m.begin(), m.end());
    p.add_term(m, oracle::random_rational(rng, -4, 4, true));
  }
  return p;
}

WheelSeries random_wheel_series(std::mt19937& rng, int order) {
  WheelSeries s(order);
  for (int n = 1; 2 * n <= order; ++n)
    if (rng() % 4) s.set(EvenWheel(n), oracle::random_rational(rng, -5, 5, true));
  return s;
}

TEST(EvenWheel, Construction) {
  EXPECT_EQ(EvenWheel::with_legs(4).half_index(), 2);
  EXPECT_EQ(EvenWheel(3).degree(), 6);
  EXPECT_THROW(EvenWheel(0), std::invalid_argument);
  EXPECT_THROW(EvenWheel::with_legs(3), std::invalid_argument);
  EXPECT_THROW(EvenWheel::with_legs(-2), std::invalid_argument);
}

TEST(WheelSeries, SetAndRender) {
  WheelSeries s(4);
  EXPECT_EQ(to_string(s), "exp( 0 )");
  s.set(EvenWheel(1), Rational(1, 48));
  s.set(EvenWheel(2), Rational(-1, 5760));
  EXPECT_EQ(to_string(s), "exp( 1/48 w2 - 1/5760 w4 )");
  EXPECT_THROW(s.set(EvenWheel(3), 1), std::invalid_argument);
  s.set(EvenWheel(1), 0);
  EXPECT_EQ(s.coefficients().size(), 1u);
  EXPECT_EQ(s.coeff(EvenWheel(1)), 0);
}

TEST(WheelPolynomial, ExpLog) {
  const WheelPolynomial e = wheel_exp(w(2), 6);
  EXPECT_EQ(e, WheelPolynomial::constant(1) + w(2) + Rational(1, 2) * w(2) * w(2) + Rational(1, 6) * w(2) * w(2) * w(2));
  EXPECT_EQ(wheel_log(e, 6), w(2));
  EXPECT_THROW(wheel_exp(WheelPolynomial::constant(1), 4), MathError);
  EXPECT_THROW(wheel_log(w(2), 4), MathError);

  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    WheelPolynomial p = random_wheel_polynomial(rng);
    p.add_term({}, -p.constant_term());
    EXPECT_EQ(wheel_log(wheel_exp(p, 8), 8), p.truncated(8));
  }
}

TEST(WNabla, Examples) {
  EXPECT_EQ(w_nabla(w(2), 4), HSeries::monomial(2, -2, 4));
  EXPECT_EQ(w_nabla(w(2) * w(4), 8), HSeries::monomial(6, 4, 8));
  EXPECT_EQ(w_nabla(WheelSeries(6)), HSeries::constant(1, 6));

  WheelSeries s(8);
  s.set(EvenWheel(1), Rational(3, 7));
  EXPECT_EQ(w_nabla(s), oracle::exp_by_powers(HSeries::monomial(2, Rational(-6, 7), 8)));
}

TEST(WNabla, IsMultiplicative) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const WheelPolynomial a = random_wheel_polynomial(rng), b = random_wheel_polynomial(rng);
    EXPECT_EQ(w_nabla(a * b, 12), w_nabla(a, 12) * w_nabla(b, 12));
    EXPECT_EQ(w_nabla(a + b, 12), w_nabla(a, 12) + w_nabla(b, 12));
  }
}

TEST(WNabla, SeriesFormMatchesPolynomialForm) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const WheelSeries s = random_wheel_series(rng, 8);
    WheelPolynomial p;
    for (const auto& [wheel, a] : s.coefficients()) p.add_term({wheel}, a);
    EXPECT_EQ(w_nabla(s), w_nabla(wheel_exp(p, 8), 8));
  }
}

TEST(WheelsFromSeries, Examples) {
  const WheelSeries nu = wheels_from_series(c_series(16));
  EXPECT_EQ(nu.coeff(EvenWheel(1)), Rational(1, 48));
  EXPECT_EQ(nu.coeff(EvenWheel(2)), Rational(-1, 5760));
  const HSeries log_c = oracle::log_c_series(16);
  for (int n = 1; 2 * n <= 16; ++n) EXPECT_EQ(nu.coeff(EvenWheel(n)), Rational(-1, 2) * log_c.coeff(2 * n));

  EXPECT_EQ(wheels_from_series(HSeries::constant(1, 6)), WheelSeries(6));
  EXPECT_THROW(wheels_from_series(HSeries::constant(2, 6)), MathError);
  EXPECT_THROW(wheels_from_series(HSeries::constant(1, 6) + HSeries::monomial(1, 1, 6)), MathError);
}

TEST(WheelsFromSeries, InvertsWNabla) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const WheelSeries s = random_wheel_series(rng, 16);
    EXPECT_EQ(wheels_from_series(w_nabla(s)), s);
  }
}

TEST(RescaleDegree, Examples) {
  WheelSeries s(4);
  s.set(EvenWheel(1), 1);
  s.set(EvenWheel(2), 1);
  const WheelSeries r = rescale_degree(s, 3);
  EXPECT_EQ(r.coeff(EvenWheel(1)), 9);
  EXPECT_EQ(r.coeff(EvenWheel(2)), 81);
  EXPECT_THROW(rescale_degree(s, 0), std::invalid_argument);
  EXPECT_EQ(rescale_degree(parse_hseries("1 + h + h^2 + O(h^3)", 3), Rational(1, 2)),
            parse_hseries("1 + 1/2*h + 1/4*h^2 + O(h^3)", 3));
}

TEST(RescaleDegree, CommutesWithWNablaAndInverts) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const WheelSeries s = random_wheel_series(rng, 12);
    const Rational r = oracle::random_rational(rng, 1, 5, true);
    EXPECT_EQ(w_nabla(rescale_degree(s, r)), rescale_degree(w_nabla(s), r));
    EXPECT_EQ(rescale_degree(rescale_degree(s, r), 1 / r), s);
  }
}

TEST(DisjointUnion, AddsExponentsAndMultipliesSeries) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const WheelSeries a = random_wheel_series(rng, 10), b = random_wheel_series(rng, 10);
    const WheelSeries u = disjoint_union(a, b);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(u.coeff(EvenWheel(n)), a.coeff(EvenWheel(n)) + b.coeff(EvenWheel(n)));
    EXPECT_EQ(w_nabla(u), w_nabla(a) * w_nabla(b));
  }
}

}  // namespace
}  // namespace nablalmo
