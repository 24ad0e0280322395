#include "nablalmo/mmr.hpp"

#include <stdexcept>

#include "nablalmo/errors.hpp"
#include "nablalmo/text.hpp"

namespace nablalmo {

HSeries mmr_series(const SeifertMatrix& v, int components, int order) {
  const NablaResult nabla = nabla_from_seifert(v, components);
  return c_series(order) * substitute_exp(nabla.polynomial, order);
}

HSeries mmr_series(const ZPoly& nabla, int order) {
  return c_series(order) * substitute_exp(nabla.expand(), order);
}

WheelSeries aarhus_wheels(const SeifertMatrix& v, int order) {
  const HSeries series = mmr_series(v, 1, order);
  if (!series.log().is_even()) {
    throw std::logic_error("W_nabla of a knot has odd-order terms; nabla must lie in Q[z^2]");
  }
  return wheels_from_series(series);
}

WheelSeries nu_wheels(int order) { return wheels_from_series(c_series(order)); }

LmoWheelData lmo_wheel_data(const ZPoly& nabla_m, const Integer& tor_order, int order) {
  if (tor_order <= 0) throw std::invalid_argument("torsion order must be positive");
  if (nabla_m.prefactor_exponent() != 0 || nabla_m.value_at_zero() != 1) {
    throw MathError("nabla of a rank-one manifold must be a polynomial in z^2 with constant term 1, got " +
                    to_string(nabla_m));
  }
  LmoWheelData data;
  data.order = order;
  data.h1_order = tor_order;
  data.nu_wheels = nu_wheels(order);
  const WheelSeries aarhus = wheels_from_series(mmr_series(nabla_m, order));
  data.knot_wheels = rescale_degree(aarhus, Rational(tor_order));
  return data;
}

ZPoly nabla_from_lmo_wheel_data(const LmoWheelData& data, int max_z_degree) {
  if (data.h1_order <= 0) throw MathError("torsion order must be positive");
  if (data.knot_wheels.order() != data.order || data.nu_wheels.order() != data.order) {
    throw MathError("wheel series orders do not match the recorded order");
  }
  if (!(data.nu_wheels == nu_wheels(data.order))) {
    throw MathError("ν wheel coefficients do not match the unknot normalization");
  }
  const WheelSeries aarhus = rescale_degree(data.knot_wheels, Rational(1, 1) / Rational(data.h1_order));
  const HSeries w = w_nabla(aarhus, data.order);
  const HSeries nabla_series = w * c_series(data.order).reciprocal();
  return series_to_z_poly(nabla_series, max_z_degree);
}

}  // namespace nablalmo
