#include "nablalmo/alexander.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "nablalmo/errors.hpp"

namespace nablalmo {

namespace {

// Coefficients a_0..a_n of the polynomial through (x_i, y_i), x_i = i.
std::vector<Rational> interpolate_at_integers(const std::vector<Rational>& y) {
  const std::size_t n = y.size();
  // Newton divided differences.
  std::vector<Rational> dd = y;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
      if (i == level) break;
    }
  // Horner on the Newton form: p = dd0 + (x-0)(dd1 + (x-1)(dd2 + ...)).
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // coeffs <- coeffs * (x - i) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= static_cast<long>(i) * coeffs[j];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

HalfLaurent seifert_determinant(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  const QMatrix& m = v.entries();
  const QMatrix mt = m.transpose();
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    values.push_back(determinant(Rational(static_cast<long>(x)) * m - mt));
  }
  const std::vector<Rational> coeffs = interpolate_at_integers(values);
  HalfLaurent p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    p += HalfLaurent::monomial(2 * static_cast<int>(j) - static_cast<int>(n), coeffs[j]);
  }
  return p;
}

NablaResult nabla_from_seifert(const SeifertMatrix& v, int components) {
  if (components < 1) throw std::invalid_argument("a link has at least one component");
  const long twice_genus = static_cast<long>(v.size()) - components + 1;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw MathError("a " + std::to_string(v.size()) + "x" + std::to_string(v.size()) +
                    " Seifert matrix cannot bound a " + std::to_string(components) + "-component link");
  }
  NablaResult result;
  result.components = components;
  result.polynomial = seifert_determinant(v);
  result.z_form = rewrite_in_z(result.polynomial, components - 1);
  if (components == 1) result.value_at_one = result.z_form.value_at_zero();
  return result;
}

DeltaNormalization normalize_delta(const HalfLaurent& delta, const Integer& h1_order) {
  if (h1_order <= 0) throw std::invalid_argument("|H_1| must be positive");
  if (delta.is_zero()) throw MathError("Alexander polynomial is zero");
  const int span = delta.min_exponent() + delta.max_exponent();
  if (span % 2 != 0) throw MathError("no power t^(i/2) makes the polynomial symmetric");
  DeltaNormalization out;
  out.half_shift = -span / 2;
  const HalfLaurent centered = delta.shifted(out.half_shift);
  if (centered.involution() != centered) {
    throw MathError("polynomial is not symmetric under t^(1/2) -> -t^(-1/2) after any shift");
  }
  const Rational at_one = centered.evaluate(1);
  if (at_one == 0) throw MathError("value at t = 1 is zero (link case is not supported)");
  const Rational order(h1_order);
  if (at_one == order) {
    out.sign = 1;
  } else if (at_one == -order) {
    out.sign = -1;
  } else {
    throw MathError("value at t = 1 is " + to_string(at_one) + ", expected +-" + to_string(order));
  }
  const HalfLaurent nabla = HalfLaurent(Rational(out.sign) / order) * centered;
  out.nabla.polynomial = nabla;
  out.nabla.z_form = rewrite_in_z(nabla, 0);
  out.nabla.components = 1;
  out.nabla.value_at_one = out.nabla.z_form.value_at_zero();
  return out;
}

ManifoldNabla nabla_manifold(const SeifertMatrix& v, const Integer& h1_order_of_m) {
  if (h1_order_of_m <= 0) throw std::invalid_argument("|H_1(M)| must be positive");
  ManifoldNabla out;
  out.nabla = nabla_from_seifert(v, 1);
  out.torsion_order = h1_order_of_m;
  out.normalized = out.nabla.value_at_one == Rational(1);
  out.symmetric = out.nabla.polynomial.involution() == out.nabla.polynomial;
  return out;
}

}  // namespace nablalmo
