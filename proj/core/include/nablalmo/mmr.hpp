#pragma once

#include "nablalmo/alexander.hpp"
#include "nablalmo/hseries.hpp"
#include "nablalmo/seifert.hpp"
#include "nablalmo/wheels.hpp"
#include "nablalmo/zpoly.hpp"

namespace nablalmo {

/// Wheel data describing the LMO invariant of a rank-one manifold N = M_K
/// obtained by 0-surgery on a knot K in a rational homology sphere M.
///
/// `knot_wheels` is the wheel part of the knot's universal invariant in the
/// LMO normalization, i.e. the Aarhus wheels rescaled degree-wise by
/// |H_1(M)|. `nu_wheels` is the wheel part of the unknot normalization ν.
struct LmoWheelData {
  WheelSeries knot_wheels;
  WheelSeries nu_wheels;
  Integer h1_order = 1;
  int order = kDefaultOrder;

  friend bool operator==(const LmoWheelData&, const LmoWheelData&) = default;
};

/// h / (e^(h/2) - e^(-h/2)) * nabla(V) at t^(1/2) = e^(h/2).
HSeries mmr_series(const SeifertMatrix& v, int components, int order);

/// Same series from a z-form of nabla.
HSeries mmr_series(const ZPoly& nabla, int order);

/// Wheel part of the Aarhus invariant of a knot with Seifert matrix V.
WheelSeries aarhus_wheels(const SeifertMatrix& v, int order);

/// wheels_from_series(c_series(order)).
WheelSeries nu_wheels(int order);

/// LMO wheel data of the rank-one manifold with nabla(M) = nabla_m and
/// |Tor H_1| = tor_order. Requires prefactor exponent 0 and nabla_m(0) = 1;
/// throws MathError otherwise.
LmoWheelData lmo_wheel_data(const ZPoly& nabla_m, const Integer& tor_order, int order);

/// Recovers nabla(M) from LMO wheel data. Throws MathError when the data
/// is inconsistent or does not come from a polynomial of z-degree at most
/// max_z_degree.
ZPoly nabla_from_lmo_wheel_data(const LmoWheelData& data, int max_z_degree);

}  // namespace nablalmo
