#include <gtest/gtest.h>

#include <random>

#include "nablalmo/errors.hpp"
#include "nablalmo/half_laurent.hpp"
#include "nablalmo/hseries.hpp"
#include "nablalmo/matrix.hpp"
#include "nablalmo/rational.hpp"
#include "nablalmo/text.hpp"
#include "nablalmo/zpoly.hpp"
#include "oracles.hpp"

namespace nablalmo {
namespace {

HalfLaurent trefoil_poly() { return HalfLaurent::monomial(2) - HalfLaurent(1) + HalfLaurent::monomial(-2); }

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("+5")), "5");
  EXPECT_EQ(parse_rational("-6/4").get_den(), 2);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, Power) {
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_THROW(power(Rational(0), -1), MathError);
}

TEST(Matrix, DeterminantInverseRank) {
  const QMatrix m{{2, 1}, {1, 2}};
  EXPECT_EQ(determinant(m), 3);
  EXPECT_EQ(inverse(m) * m, QMatrix::identity(2));
  EXPECT_EQ(rank(QMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), MathError);
  EXPECT_EQ(determinant(QMatrix(0, 0)), 1);
}

TEST(HalfLaurent, Arithmetic) {
  const HalfLaurent s = HalfLaurent::t_half();
  EXPECT_EQ(s * s, HalfLaurent::t());
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ((s + 1) * (s - 1), HalfLaurent::t() - 1);
}

TEST(HalfLaurent, InvolutionAndEvaluation) {
  EXPECT_EQ(trefoil_poly().involution(), trefoil_poly());
  EXPECT_EQ(HalfLaurent::t_half().involution(), HalfLaurent::monomial(-1, -1));
  EXPECT_EQ(trefoil_poly().evaluate(1), 1);
  EXPECT_EQ(trefoil_poly().evaluate(2), Rational(4) - 1 + Rational(1, 4));
  EXPECT_THROW(trefoil_poly().evaluate(0), MathError);
  EXPECT_EQ((HalfLaurent::t() + 3).evaluate(0), 3);
}

TEST(HalfLaurent, InvolutionIsRingAutomorphism) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-5, 5), c(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    HalfLaurent p, q;
    for (int k = 0; k < 4; ++k) {
      p += HalfLaurent::monomial(e(rng), c(rng));
      q += HalfLaurent::monomial(e(rng), c(rng));
    }
    EXPECT_EQ((p * q).involution(), p.involution() * q.involution());
    EXPECT_EQ(p.involution().involution(), p);
  }
}

TEST(RewriteInZ, Examples) {
  EXPECT_EQ(rewrite_in_z(trefoil_poly(), 0), ZPoly({1, 1}));
  EXPECT_EQ(rewrite_in_z(HalfLaurent(1), 0), ZPoly({1}));
  EXPECT_THROW(rewrite_in_z(HalfLaurent::t() - HalfLaurent::monomial(-2), 0), MathError);
  EXPECT_EQ(rewrite_in_z(HalfLaurent{}, 0), ZPoly{});
  // z^3 needs prefactor 1.
  EXPECT_EQ(rewrite_in_z(z_power(3), 1), ZPoly({0, 1}, 1));
  EXPECT_THROW(rewrite_in_z(z_power(3), 0), MathError);
}

TEST(RewriteInZ, InvariantPolynomialsRoundTrip) {
  // Anything fixed by the involution with even support is a polynomial in z^2.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    HalfLaurent p(c(rng));
    for (int k = 1; k <= 4; ++k) {
      const Rational a = c(rng);
      const int e = 2 * k;
      p += HalfLaurent::monomial(e, a) + HalfLaurent::monomial(-e, a);
    }
    ASSERT_EQ(p.involution(), p);
    const ZPoly z = rewrite_in_z(p, 0);
    EXPECT_EQ(z.expand(), p);
  }
}

TEST(HSeries, SubstituteExp) {
  EXPECT_EQ(substitute_exp(HalfLaurent::t_half(), 2), HSeries({1, Rational(1, 2), Rational(1, 8)}, 2));
  EXPECT_EQ(substitute_exp(HalfLaurent(1), 5), HSeries::constant(1, 5));
  EXPECT_EQ(substitute_exp(trefoil_poly(), 4), HSeries({1, 0, 1, 0, Rational(1, 12)}, 4));
}

TEST(HSeries, SubstituteExpIsMultiplicative) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-4, 4), c(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    HalfLaurent p, q;
    for (int k = 0; k < 3; ++k) {
      p += HalfLaurent::monomial(e(rng), c(rng));
      q += HalfLaurent::monomial(e(rng), c(rng));
    }
    for (int order : {0, 3, 8}) {
      EXPECT_EQ(substitute_exp(p * q, order), substitute_exp(p, order) * substitute_exp(q, order));
    }
  }
}

TEST(HSeries, ArithmeticExamples) {
  const HSeries h2 = HSeries::monomial(2, 1, 6);
  EXPECT_EQ(h2.exp().log(), h2);
  EXPECT_EQ(HSeries({1, 1}, 3).reciprocal(), HSeries({1, -1, 1, -1}, 3));
  const HSeries h = HSeries::monomial(1, 1, 5);
  EXPECT_EQ(h.exp() * (-h).exp(), HSeries::constant(1, 5));
  EXPECT_THROW(h.exp().exp(), MathError);
  EXPECT_THROW(HSeries(3).reciprocal(), MathError);
  EXPECT_THROW(HSeries::constant(2, 3).log(), MathError);
}

TEST(HSeries, MixedOrdersTruncateToMinimum) {
  const HSeries a = HSeries::constant(1, 8);
  const HSeries b = HSeries({1, 1, 1, 1}, 3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ((a * b).order(), 3);
}

TEST(HSeries, ExpMatchesPowerSumOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> g{0};
    for (int m = 1; m <= 8; ++m) g.push_back(oracle::random_rational(rng, -3, 3, true));
    const HSeries f(g, 8);
    EXPECT_EQ(f.exp(), oracle::exp_by_powers(f));
    EXPECT_EQ(f.exp().log(), f);
    const HSeries u = f.exp();
    EXPECT_EQ(u * u.reciprocal(), HSeries::constant(1, 8));
  }
}

TEST(CSeries, MatchesBernoulliOracle) {
  EXPECT_EQ(c_series(4), HSeries({1, 0, Rational(-1, 24), 0, Rational(7, 5760)}, 4));
  EXPECT_EQ(c_series(0), HSeries::constant(1, 0));
  for (int order : {1, 5, 16, 24}) {
    EXPECT_EQ(c_series(order), oracle::c_series(order));
    EXPECT_TRUE(c_series(order).is_even());
  }
}

TEST(SeriesToZPoly, Examples) {
  EXPECT_EQ(series_to_z_poly(HSeries::constant(1, 6), 6), ZPoly({1}));
  EXPECT_EQ(series_to_z_poly(HSeries({0, 0, 1, 0, Rational(1, 12)}, 4), 4), ZPoly({0, 1}));
  EXPECT_EQ(series_to_z_poly(substitute_exp(trefoil_poly(), 16), 16), ZPoly({1, 1}));
  EXPECT_THROW(series_to_z_poly(HSeries({1, 1}, 4), 4), MathError);
  // h^2 alone is not a polynomial in z^2 of degree <= 2 past order 3.
  EXPECT_THROW(series_to_z_poly(HSeries::monomial(2, 1, 6), 2), MathError);
}

TEST(SeriesToZPoly, InvertsSubstitution) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> b;
    for (int k = 0; k <= 4; ++k) b.push_back(oracle::random_rational(rng, -5, 5, true));
    const ZPoly p(b, 0);
    EXPECT_EQ(series_to_z_poly(substitute_exp(p.expand(), 16), 8), p);
  }
}

}  // namespace
}  // namespace nablalmo
