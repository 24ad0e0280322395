#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

HalfLaurent cofactor_determinant(const std::vector<std::vector<HalfLaurent>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return HalfLaurent(1);
  if (n == 1) return m[0][0];
  HalfLaurent det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<HalfLaurent>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<HalfLaurent> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const HalfLaurent term = m[0][c] * cofactor_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

HalfLaurent seifert_determinant(const QMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::vector<HalfLaurent>> m(n, std::vector<HalfLaurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = HalfLaurent::monomial(1, v(i, j)) - HalfLaurent::monomial(-1, v(j, i));
  return cofactor_determinant(m);
}

Rational bernoulli(unsigned n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / Rational(binom);
  }
  return b[n];
}

HSeries c_series(int order) {
  std::vector<Rational> c;
  Integer fact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    const Rational two_pow = n == 0 ? Rational(2) : Rational(1, 1) / Rational(Integer(1) << static_cast<unsigned>(n - 1));
    c.push_back((two_pow - 1) * bernoulli(static_cast<unsigned>(n)) / Rational(fact));
  }
  return HSeries(c, order);
}

HSeries log_c_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 1; 2 * n <= order; ++n) {
    Integer fact = 1;
    for (int k = 2; k <= 2 * n; ++k) fact *= k;
    c[static_cast<std::size_t>(2 * n)] = -bernoulli(static_cast<unsigned>(2 * n)) / (Rational(2 * n) * Rational(fact));
  }
  return HSeries(c, order);
}

HSeries exp_by_powers(const HSeries& g) {
  const int order = g.order();
  HSeries sum = HSeries::constant(1, order);
  HSeries power = HSeries::constant(1, order);
  Rational fact = 1;
  for (int k = 1; k <= order; ++k) {
    power *= g;
    fact *= k;
    sum += (1 / fact) * power;
  }
  return sum;
}

QMatrix block_elimination(const nablalmo::FramedLinkMatrix& m) {
  std::vector<std::size_t> order = m.surgery_indices();
  const std::size_t k = order.size();
  for (auto i : m.residual_indices()) order.push_back(i);
  QMatrix a = m.entries().submatrix(order, order);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a(p, c) == 0) ++p;
    if (p == k) throw std::runtime_error("singular surgery block");
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) a(c, j) /= pivot;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  QMatrix out(n - k, n - k);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j) out(i - k, j - k) = a(i, j);
  return out;
}

ZMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps) {
  ZMatrix p = ZMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) p(0, 0) = -1;
    return p;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    if (rng() % 4 == 0) {
      for (std::size_t c = 0; c < n; ++c) std::swap(p(i, c), p(j, c));
    } else {
      const int c = coef(rng);
      for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
    }
  }
  return p;
}

Rational random_rational(std::mt19937& rng, int lo, int hi, bool allow_fractions) {
  std::uniform_int_distribution<int> num(lo, hi);
  if (!allow_fractions) return num(rng);
  std::uniform_int_distribution<int> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QMatrix random_symmetric(std::size_t n, std::mt19937& rng, int lo, int hi, bool allow_fractions) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = random_rational(rng, lo, hi, allow_fractions);
      m(j, i) = m(i, j);
    }
  return m;
}

QMatrix random_seifert(std::size_t genus, int components, std::mt19937& rng) {
  const std::size_t n = 2 * genus + static_cast<std::size_t>(components) - 1;
  ZMatrix standard(n, n);
  for (std::size_t b = 0; b < genus; ++b) {
    standard(2 * b, 2 * b + 1) = 1;
    standard(2 * b + 1, 2 * b) = -1;
  }
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const ZMatrix p = random_unimodular(n, rng, 3);
    const ZMatrix f = p * standard * p.transpose();
    QMatrix v(n, n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      v(i, i) = entry(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        v(i, j) = entry(rng);
        v(j, i) = v(i, j) - Rational(f(i, j));  // V - V* = F
        if (abs(v(j, i)) > 3) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return v;
  }
  throw std::runtime_error("could not sample a Seifert matrix");
}

}  // namespace oracle
