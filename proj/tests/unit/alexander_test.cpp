#include <gtest/gtest.h>

#include <random>

#include "nablalmo/alexander.hpp"
#include "nablalmo/errors.hpp"
#include "nablalmo/text.hpp"
#include "oracles.hpp"

namespace nablalmo {
namespace {

SeifertMatrix trefoil() { return SeifertMatrix(QMatrix{{-1, 1}, {0, -1}}); }
SeifertMatrix figure_eight() { return SeifertMatrix(QMatrix{{1, 1}, {0, -1}}); }

QMatrix conjugate(const ZMatrix& p, const QMatrix& v) { return to_rational(p) * v * to_rational(p).transpose(); }

// Bottom-corner stabilization by [[x, 1], [0, 0]].
QMatrix stabilize(const QMatrix& v, const Rational& x) {
  const std::size_t n = v.rows();
  QMatrix s(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = v(i, j);
  s(n, n) = x;
  s(n, n + 1) = 1;
  return s;
}

TEST(NablaFromSeifert, Examples) {
  auto r = nabla_from_seifert(SeifertMatrix(QMatrix(0, 0)), 1);
  EXPECT_EQ(r.z_form, ZPoly({1}));
  EXPECT_EQ(r.polynomial, HalfLaurent(1));

  r = nabla_from_seifert(trefoil(), 1);
  EXPECT_EQ(r.z_form, ZPoly({1, 1}));
  EXPECT_EQ(to_string(r.polynomial), "t^-1 - 1 + t");
  EXPECT_EQ(r.value_at_one, Rational(1));

  EXPECT_EQ(nabla_from_seifert(figure_eight(), 1).z_form, ZPoly({1, -1}));
  for (int n = 0; n <= 5; ++n) {
    const QMatrix v{{-1, 1}, {0, n}};
    const auto twist = nabla_from_seifert(SeifertMatrix(v), 1);
    EXPECT_EQ(twist.z_form, ZPoly({1, -n}));
    EXPECT_EQ(twist.polynomial, oracle::seifert_determinant(v));
  }
}

TEST(NablaFromSeifert, Links) {
  const auto hopf = nabla_from_seifert(SeifertMatrix(QMatrix{{-1}}), 2);
  EXPECT_EQ(hopf.z_form, ZPoly({-1}, 1));
  EXPECT_FALSE(hopf.value_at_one.has_value());
  EXPECT_THROW(nabla_from_seifert(trefoil(), 2), MathError);
  EXPECT_THROW(nabla_from_seifert(SeifertMatrix(QMatrix(1, 1)), 4), MathError);
  // Two-component size with a unimodular skew part cannot give z * Q[z^2].
  EXPECT_THROW(nabla_from_seifert(trefoil(), 3), MathError);
}

TEST(NablaFromSeifert, RejectsNonSeifertMatrices) {
  // A knot has an even-sized Seifert matrix.
  EXPECT_THROW(nabla_from_seifert(SeifertMatrix(QMatrix{{1}}), 1), MathError);
}

TEST(NablaFromSeifert, AgreesWithCofactorOracle) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int l = 1 + static_cast<int>(rng() % 3);
    const std::size_t g = rng() % 3;
    if (2 * g + l - 1 > 6) continue;
    const QMatrix v = oracle::random_seifert(g, l, rng);
    const auto r = nabla_from_seifert(SeifertMatrix(v), l);
    EXPECT_EQ(r.polynomial, oracle::seifert_determinant(v));
    EXPECT_EQ(r.z_form.expand(), r.polynomial);
    EXPECT_EQ(r.polynomial.involution(), r.polynomial);
  }
}

TEST(NablaFromSeifert, BasisAndStabilizationInvariance) {
  std::mt19937 rng(8);
  for (const QMatrix& v : {trefoil().entries(), figure_eight().entries(), QMatrix{{-1, 1}, {0, 3}}}) {
    const ZPoly expected = nabla_from_seifert(SeifertMatrix(v), 1).z_form;
    for (int k = 0; k < 20; ++k) {
      const ZMatrix p = oracle::random_unimodular(v.rows(), rng);
      EXPECT_EQ(nabla_from_seifert(SeifertMatrix(conjugate(p, v)), 1).z_form, expected);
    }
    for (int x = -2; x <= 2; ++x) {
      const QMatrix s = stabilize(v, x);
      EXPECT_EQ(nabla_from_seifert(SeifertMatrix(s), 1).z_form, expected);
      EXPECT_EQ(oracle::seifert_determinant(s), expected.expand());
    }
  }
}

TEST(NormalizeDelta, Examples) {
  auto d = normalize_delta(HalfLaurent::t(), 1);
  EXPECT_EQ(d.nabla.z_form, ZPoly({1}));
  EXPECT_EQ(d.half_shift, -2);
  EXPECT_EQ(d.sign, 1);

  const HalfLaurent delta = parse_half_laurent("t^2 - t + 1");
  d = normalize_delta(delta, 1);
  EXPECT_EQ(d.nabla.polynomial, parse_half_laurent("t - 1 + t^-1"));
  EXPECT_EQ(d.half_shift, -2);
  EXPECT_EQ(d.sign, 1);

  d = normalize_delta(-delta, 1);
  EXPECT_EQ(d.nabla.polynomial, parse_half_laurent("t - 1 + t^-1"));
  EXPECT_EQ(d.sign, -1);

  // |H_1| = 3 divides out.
  d = normalize_delta(HalfLaurent(3) * parse_half_laurent("-t^2 + 3t - 1"), 3);
  EXPECT_EQ(d.nabla.z_form, ZPoly({1, -1}));
}

TEST(NormalizeDelta, Errors) {
  EXPECT_THROW(normalize_delta(HalfLaurent{}, 1), MathError);
  EXPECT_THROW(normalize_delta(parse_half_laurent("t^(1/2) + 1"), 1), MathError);
  EXPECT_THROW(normalize_delta(parse_half_laurent("t^2 - 2t + 3"), 1), MathError);
  EXPECT_THROW(normalize_delta(parse_half_laurent("t^2 - t + 1"), 2), MathError);
  EXPECT_THROW(normalize_delta(parse_half_laurent("t - 1"), 1), MathError);  // Δ(1) = 0
}

TEST(NormalizeDelta, IndependentOfUnits) {
  std::mt19937 rng(12);
  const std::vector<HalfLaurent> fixtures{parse_half_laurent("t^2 - t + 1"), parse_half_laurent("-t^2 + 3t - 1"),
                                          parse_half_laurent("t^4 - 2t^3 + 3t^2 - 2t + 1"), HalfLaurent(1)};
  for (const auto& delta : fixtures) {
    const auto base = normalize_delta(delta, 1).nabla.polynomial;
    for (int trial = 0; trial < 100; ++trial) {
      const int shift = static_cast<int>(rng() % 21) - 10;
      const int sign = rng() % 2 ? 1 : -1;
      const HalfLaurent unit = HalfLaurent::monomial(shift, sign);
      EXPECT_EQ(normalize_delta(unit * delta, 1).nabla.polynomial, base);
    }
  }
}

TEST(NablaManifold, Examples) {
  auto m = nabla_manifold(SeifertMatrix(QMatrix(0, 0)), 1);
  EXPECT_EQ(m.nabla.z_form, ZPoly({1}));
  EXPECT_TRUE(m.normalized);
  EXPECT_TRUE(m.symmetric);

  m = nabla_manifold(trefoil(), 1);
  EXPECT_EQ(m.nabla.z_form, ZPoly({1, 1}));

  m = nabla_manifold(figure_eight(), 3);
  EXPECT_EQ(m.nabla.z_form, ZPoly({1, -1}));
  EXPECT_EQ(m.torsion_order, 3);
  EXPECT_TRUE(m.normalized);

  m = nabla_manifold(SeifertMatrix(QMatrix{{0, 2}, {0, 0}}), 1);
  EXPECT_FALSE(m.normalized);
}

}  // namespace
}  // namespace nablalmo
