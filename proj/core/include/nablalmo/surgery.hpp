#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nablalmo/matrix.hpp"

namespace nablalmo {

/// A symmetric matrix with named rows/columns.
struct LabeledMatrix {
  std::vector<std::string> labels;
  QMatrix entries;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

/// Linking matrix of a framed link split into surgery components X' and
/// residual components X''. Entries are l_xy = lk(x, y), framings on the
/// diagonal.
class FramedLinkMatrix {
 public:
  /// Throws std::invalid_argument for duplicate labels, unknown surgery
  /// labels, a shape mismatch, or a non-symmetric matrix.
  FramedLinkMatrix(std::vector<std::string> labels, const std::vector<std::string>& surgery_labels,
                   QMatrix entries);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const QMatrix& entries() const noexcept { return entries_; }
  /// X' and X'' in the order they appear in labels().
  std::vector<std::string> surgery_labels() const;
  std::vector<std::string> residual_labels() const;
  const std::vector<std::size_t>& surgery_indices() const noexcept { return surgery_; }
  const std::vector<std::size_t>& residual_indices() const noexcept { return residual_; }

  QMatrix surgery_block() const { return entries_.submatrix(surgery_, surgery_); }
  QMatrix residual_block() const { return entries_.submatrix(residual_, residual_); }
  /// Rows X'', columns X'.
  QMatrix mixed_block() const { return entries_.submatrix(residual_, surgery_); }

  /// True when every framing on X' is an integer.
  bool integral_surgery() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> surgery_;
  std::vector<std::size_t> residual_;
  QMatrix entries_;
};

/// Linking numbers of X'' after surgery on X': the Schur complement
/// l'' - l''' (l')^-1 l'''^T. Throws MathError if the X' block is singular.
LabeledMatrix surgery_transform(const FramedLinkMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
Signature signature_pair(const QMatrix& a);

/// |det A|, the order of H_1 of the manifold obtained by integral surgery
/// with linking matrix A. Throws MathError for singular or non-integral A.
Integer h1_order(const QMatrix& a);

}  // namespace nablalmo
