#include "nablalmo/hseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nablalmo/errors.hpp"

namespace nablalmo {

HSeries::HSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

HSeries::HSeries(std::vector<Rational> coeffs, int order) : HSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

HSeries HSeries::constant(const Rational& c, int order) {
  HSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

HSeries HSeries::monomial(int k, const Rational& c, int order) {
  HSeries s(order);
  if (k < 0) throw std::invalid_argument("negative power of h");
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

Rational HSeries::coeff(int m) const {
  if (m < 0 || m > order()) return 0;
  return coeffs_[static_cast<std::size_t>(m)];
}

bool HSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool HSeries::is_even() const {
  for (std::size_t m = 1; m < coeffs_.size(); m += 2)
    if (coeffs_[m] != 0) return false;
  return true;
}

HSeries HSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise the order of a truncated series");
  return HSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

HSeries& HSeries::operator+=(const HSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HSeries& HSeries::operator*=(const HSeries& o) {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  std::vector<Rational> product(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) product[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(product);
  return *this;
}

HSeries& HSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HSeries HSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw MathError("reciprocal of a series with zero constant term");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> r(n, Rational(0));
  r[0] = 1 / coeffs_[0];
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += coeffs_[k] * r[m - k];
    r[m] = -acc * r[0];
  }
  return HSeries(std::move(r), order());
}

// n f_n = sum_{k=1}^{n} k g_k f_{n-k}, from f' = g' f.
HSeries HSeries::exp() const {
  if (coeffs_[0] != 0) throw MathError("exp of a series with nonzero constant term");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> f(n, Rational(0));
  f[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += Rational(static_cast<long>(k)) * coeffs_[k] * f[m - k];
    f[m] = acc / static_cast<long>(m);
  }
  return HSeries(std::move(f), order());
}

// n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}, from g' f = f'.
HSeries HSeries::log() const {
  if (coeffs_[0] != 1) throw MathError("log of a series whose constant term is not 1");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> g(n, Rational(0));
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = Rational(static_cast<long>(m)) * coeffs_[m];
    for (std::size_t k = 1; k < m; ++k) acc -= Rational(static_cast<long>(k)) * g[k] * coeffs_[m - k];
    g[m] = acc / static_cast<long>(m);
  }
  return HSeries(std::move(g), order());
}

HSeries HSeries::rescaled(const Rational& r) const {
  HSeries s = *this;
  Rational factor = 1;
  for (auto& c : s.coeffs_) {
    c *= factor;
    factor *= r;
  }
  return s;
}

HSeries substitute_exp(const HalfLaurent& p, int order) {
  HSeries result(order);
  std::vector<Rational> inv_factorial(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) inv_factorial[static_cast<std::size_t>(m)] = 1 / factorial(static_cast<unsigned>(m));
  for (const auto& [k, c] : p.terms()) {
    Rational rate(k, 2);
    rate.canonicalize();
    std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
    Rational rate_power = 1;
    for (int m = 0; m <= order; ++m) {
      e[static_cast<std::size_t>(m)] = c * rate_power * inv_factorial[static_cast<std::size_t>(m)];
      rate_power *= rate;
    }
    result += HSeries(std::move(e), order);
  }
  return result;
}

HSeries c_series(int order) {
  // 2 sinh(h/2) / h = sum_m h^(2m) / (4^m (2m+1)!)
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int m = 0; 2 * m <= order; ++m) {
    c[static_cast<std::size_t>(2 * m)] = 1 / (power(Rational(4), m) * factorial(static_cast<unsigned>(2 * m + 1)));
  }
  return HSeries(std::move(c), order).reciprocal();
}

HSeries z_squared_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int m = 1; 2 * m <= order; ++m) c[static_cast<std::size_t>(2 * m)] = 2 / factorial(static_cast<unsigned>(2 * m));
  return HSeries(std::move(c), order);
}

ZPoly series_to_z_poly(const HSeries& g, int max_z_degree) {
  if (!g.is_even()) throw MathError("series has odd-order terms; it is not a polynomial in z^2");
  const int order = g.order();
  const int max_k = std::min(max_z_degree, order) / 2;
  const HSeries z2 = z_squared_series(order);
  HSeries residual = g;
  HSeries basis = HSeries::constant(1, order);  // (z^2)^k, leading term h^(2k)
  std::vector<Rational> b;
  for (int k = 0; k <= max_k; ++k) {
    const Rational c = residual.coeff(2 * k);
    b.push_back(c);
    if (c != 0) residual -= c * basis;
    basis *= z2;
  }
  if (!residual.is_zero()) {
    throw MathError("series is not a polynomial in z^2 of z-degree <= " + std::to_string(max_z_degree) +
                    " to order " + std::to_string(order));
  }
  return ZPoly(std::move(b), 0);
}

}  // namespace nablalmo
