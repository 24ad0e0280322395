#pragma once

#include <optional>

#include "nablalmo/half_laurent.hpp"
#include "nablalmo/seifert.hpp"
#include "nablalmo/zpoly.hpp"

namespace nablalmo {

/// The Conway-normalized Alexander polynomial in both of its forms.
struct NablaResult {
  HalfLaurent polynomial;
  ZPoly z_form;  // prefactor exponent components - 1
  int components = 1;
  /// nabla at t = 1, reported for knots (equals det(V - V*)).
  std::optional<Rational> value_at_one;
};

/// det(t^(1/2) V - t^(-1/2) V*) as a Laurent polynomial in t^(1/2).
/// Computed by evaluating det(t V - V*) at n+1 integer points and
/// interpolating, then shifting by t^(-n/2).
HalfLaurent seifert_determinant(const SeifertMatrix& v);

/// Throws MathError when size - components + 1 is odd or negative, or when
/// the determinant is not in z^(components-1) Q[z^2].
NablaResult nabla_from_seifert(const SeifertMatrix& v, int components = 1);

/// Turns an Alexander polynomial known only up to units +-t^(i/2) into nabla
/// for a knot in a rational homology sphere with |H_1| = h1_order.
struct DeltaNormalization {
  NablaResult nabla;
  int half_shift = 0;  // i in t^(i/2)
  int sign = 1;        // epsilon
};

DeltaNormalization normalize_delta(const HalfLaurent& delta, const Integer& h1_order);

/// nabla of the rank-one manifold obtained by 0-surgery on a null-homologous
/// knot K with Seifert matrix V inside M, |H_1(M)| = h1_order_of_m.
struct ManifoldNabla {
  NablaResult nabla;
  Integer torsion_order;
  bool normalized = false;  // nabla(1) == 1
  bool symmetric = false;   // fixed by t^(1/2) -> -t^(-1/2)
};

ManifoldNabla nabla_manifold(const SeifertMatrix& v, const Integer& h1_order_of_m);

}  // namespace nablalmo
