#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nablalmo/matrix.hpp"
#include "nablalmo/seifert.hpp"
#include "nablalmo/surgery.hpp"

namespace nablalmo {

/// A univalent vertex of a strut: a component label, or its formal
/// derivative "∂label" when `boundary` is set.
struct Leg {
  std::string label;
  bool boundary = false;

  friend auto operator<=>(const Leg&, const Leg&) = default;
  friend bool operator==(const Leg&, const Leg&) = default;
};

/// An edge with two labeled ends. Struts are unordered, so `first <= second`
/// is enforced on construction.
struct Strut {
  Strut(Leg a, Leg b);

  Leg first;
  Leg second;

  friend auto operator<=>(const Strut&, const Strut&) = default;
  friend bool operator==(const Strut&, const Strut&) = default;
};

/// A product of struts, kept sorted so that equal monomials compare equal.
using StrutMonomial = std::vector<Strut>;

/// Finite linear combination of strut monomials with rational coefficients.
class StrutPolynomial {
 public:
  using Terms = std::map<StrutMonomial, Rational>;

  StrutPolynomial() = default;
  static StrutPolynomial one();
  static StrutPolynomial monomial(StrutMonomial m, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const StrutMonomial& m) const;

  void add_term(StrutMonomial m, const Rational& c);
  StrutPolynomial& operator+=(const StrutPolynomial& o);
  StrutPolynomial& operator*=(const Rational& s);
  friend StrutPolynomial operator+(StrutPolynomial a, const StrutPolynomial& b) { return a += b; }
  friend StrutPolynomial operator*(const Rational& s, StrutPolynomial a) { return a *= s; }
  friend StrutPolynomial operator*(const StrutPolynomial& a, const StrutPolynomial& b);
  friend bool operator==(const StrutPolynomial& a, const StrutPolynomial& b) { return a.terms_ == b.terms_; }

  /// Keeps the monomials whose total leg weight is at most `max_weight`.
  StrutPolynomial truncated(const std::function<int(const Leg&)>& leg_weight, int max_weight) const;

 private:
  Terms terms_;
};

StrutMonomial make_monomial(std::vector<Strut> struts);
int monomial_weight(const StrutMonomial& m, const std::function<int(const Leg&)>& leg_weight);

/// exp((1/2) sum_{i,j} q_ij strut(i,j)) over the labels X. Symmetric q.
struct StrutQuadratic {
  std::vector<std::string> labels;
  QMatrix q;

  friend bool operator==(const StrutQuadratic&, const StrutQuadratic&) = default;
};

/// (1/2) sum_{i,j} q_ij strut(leg_i, leg_j) as a polynomial: diagonal
/// struts carry q_ii / 2, off-diagonal struts q_ij.
StrutPolynomial quadratic_exponent(const std::vector<Leg>& legs, const QMatrix& q);

/// exp(p) for p a linear combination of single struts, keeping monomials of
/// leg weight <= max_weight. Every strut in p must have positive weight.
StrutPolynomial truncated_exp(const StrutPolynomial& p, const std::function<int(const Leg&)>& leg_weight,
                              int max_weight);

/// Strut degree <= max_degree part of exp((1/2) sum q_ij strut(i,j)).
StrutPolynomial strut_exponential(const StrutQuadratic& quadratic, int max_degree);

/// The pairing <left, right> over the surgery labels X': sums over all ways
/// of gluing the x-labeled legs of `left` bijectively to the ∂x-labeled legs
/// of `right`, for every x in X' independently. Monomial pairs whose leg
/// counts differ for some x contribute zero.
///
/// `left` must carry no ∂-legs and no strut with both legs in X' (such a
/// strut would close into a circle whose value is not defined here);
/// `right` must consist of ∂X' legs only. Violations throw MathError.
StrutPolynomial wick_pair(const StrutPolynomial& left, const StrutPolynomial& right,
                          const std::vector<std::string>& surgery_labels);

/// The Gaussian integral over X' of the full strut exponential of a linking
/// matrix, evaluated by wick_pair on truncations: the result is exact in
/// strut degree <= max_degree over X''.
StrutPolynomial gaussian_integral(const FramedLinkMatrix& m, int max_degree);

/// Strut part of the Aarhus invariant: exp((1/2) sum l~_ij strut(i,j)) with
/// l~ the surgery transform. Requires integral framings on X'.
StrutQuadratic strut_part_of_aarhus(const FramedLinkMatrix& m);

/// Strut part of the tangle obtained from a Seifert surface: q = (V + V*)/2.
StrutQuadratic tangle_strut_part(const SeifertMatrix& v);

/// Same contract as strut_part_of_aarhus, but computed by pairing: the
/// exponent is read off the strut-degree-one part of gaussian_integral.
StrutQuadratic gaussian_pair(const FramedLinkMatrix& m);

std::string to_string(const Leg& leg);
std::string to_string(const Strut& s);
std::string to_string(const StrutPolynomial& p);

}  // namespace nablalmo
