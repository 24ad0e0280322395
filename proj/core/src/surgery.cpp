#include "nablalmo/surgery.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "nablalmo/errors.hpp"

namespace nablalmo {

FramedLinkMatrix::FramedLinkMatrix(std::vector<std::string> labels, const std::vector<std::string>& surgery_labels,
                                   QMatrix entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.rows() != labels_.size() || entries_.cols() != labels_.size()) {
    throw std::invalid_argument("linking matrix size does not match the number of labels");
  }
  if (!entries_.is_symmetric()) throw std::invalid_argument("linking matrix is not symmetric");
  const std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw std::invalid_argument("duplicate link component labels");
  const std::set<std::string> surgery(surgery_labels.begin(), surgery_labels.end());
  if (surgery.size() != surgery_labels.size()) throw std::invalid_argument("duplicate surgery labels");
  for (const auto& s : surgery) {
    if (!unique.count(s)) throw std::invalid_argument("surgery label '" + s + "' is not a component");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    (surgery.count(labels_[i]) ? surgery_ : residual_).push_back(i);
  }
}

std::vector<std::string> FramedLinkMatrix::surgery_labels() const {
  std::vector<std::string> out;
  for (auto i : surgery_) out.push_back(labels_[i]);
  return out;
}

std::vector<std::string> FramedLinkMatrix::residual_labels() const {
  std::vector<std::string> out;
  for (auto i : residual_) out.push_back(labels_[i]);
  return out;
}

bool FramedLinkMatrix::integral_surgery() const {
  return std::all_of(surgery_.begin(), surgery_.end(), [&](std::size_t i) { return is_integer(entries_(i, i)); });
}

LabeledMatrix surgery_transform(const FramedLinkMatrix& m) {
  const QMatrix block = m.surgery_block();
  const QMatrix mixed = m.mixed_block();
  // Solve block * Y = mixed^T by elimination rather than forming an inverse.
  const std::size_t k = block.rows();
  const std::size_t r = mixed.rows();
  QMatrix a = block;
  QMatrix y = mixed.transpose();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a(p, c) == 0) ++p;
    if (p == k) {
      throw MathError("surgery block on {" + [&] {
        std::string s;
        for (const auto& l : m.surgery_labels()) s += (s.empty() ? "" : ", ") + l;
        return s;
      }() + "} is singular; the surgered manifold is not a rational homology sphere");
    }
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(p, j), a(c, j));
      for (std::size_t j = 0; j < r; ++j) std::swap(y(p, j), y(c, j));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < k; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < r; ++j) y(i, j) -= f * y(c, j);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) y(i, j) /= a(i, i);
  return {m.residual_labels(), m.residual_block() - mixed * y};
}

Signature signature_pair(const QMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("signature of a non-symmetric matrix");
  QMatrix a = input;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  auto add_index = [&](std::size_t i, std::size_t j, const Rational& c) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += c * a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += c * a(k, j);
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: a(i,i) + 2 a(i,j) + a(j,j) becomes nonzero after
      // adding index j to index i.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // remaining block is zero
      add_index(oi, oj, 1);
      p = oi;
    }
    swap_index(k, p);
    const Rational pivot = a(k, k);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_index(i, k, -a(i, k) / pivot);
    }
  }
  return sig;
}

Integer h1_order(const QMatrix& a) {
  if (!is_integral(a)) throw MathError("linking matrix is not integral");
  const Rational d = determinant(a);
  if (d == 0) throw MathError("linking matrix is singular; H_1 is infinite");
  return Rational(abs(d)).get_num();
}

}  // namespace nablalmo
