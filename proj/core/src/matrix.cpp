#include "nablalmo/matrix.hpp"

#include <utility>

#include "nablalmo/errors.hpp"

namespace nablalmo {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw MathError("matrix entry " + to_string(m(i, j)) + " is not an integer");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

bool is_integral(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

namespace {

// Reduces `a` to row echelon form in place; returns the rank and the sign of
// the row permutation.
std::pair<std::size_t, int> echelon(QMatrix& a) {
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return {r, sign};
}

}  // namespace

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  QMatrix a = m;
  const auto [r, sign] = echelon(a);
  if (r < a.rows()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  return echelon(a).first;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw MathError("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Integer determinant(const ZMatrix& m) { return determinant(to_rational(m)).get_num(); }

}  // namespace nablalmo
