#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nablalmo/matrix.hpp"

namespace nablalmo {

/// A square rational matrix V representing a Seifert form. Any square
/// matrix is accepted; whether it is realized by a surface in S^3 is a
/// separate question answered by realizability_report.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws std::invalid_argument if `entries` is not square.
  explicit SeifertMatrix(QMatrix entries);

  const QMatrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.rows(); }
  bool integral() const { return is_integral(entries_); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.entries_ == b.entries_; }

 private:
  QMatrix entries_;
};

/// V = U + F/2 with F = V - V* skew and U = (V + V*)/2 symmetric.
struct SeifertDecomposition {
  QMatrix skew;
  QMatrix symmetric;
};

SeifertDecomposition decompose(const SeifertMatrix& v);

/// Congruence normal form of an integral skew-symmetric matrix:
/// transform * F * transform^T is block diagonal with blocks
/// [[0, d_i], [-d_i, 0]], d_1 | d_2 | ..., followed by a zero block.
struct SkewNormalForm {
  std::vector<Integer> elementary_divisors;
  std::size_t corank = 0;
  ZMatrix transform;
};

/// Pivots on the nonzero entry of least absolute value, ties broken by the
/// lowest row then column. Throws MathError if F is not skew-symmetric.
SkewNormalForm skew_normal_form(const ZMatrix& f);

/// The block matrix described by a normal form (useful for certification).
ZMatrix standard_skew_form(const SkewNormalForm& form);

/// Surface data read off a Seifert matrix. `realizable_in_s3` is empty for
/// non-integral V, where the realizability statement does not apply.
struct RealizabilityReport {
  std::optional<bool> realizable_in_s3;
  std::size_t genus = 0;
  std::size_t boundary_components = 0;
  std::vector<Integer> elementary_divisors;
};

RealizabilityReport realizability_report(const SeifertMatrix& v);

}  // namespace nablalmo
