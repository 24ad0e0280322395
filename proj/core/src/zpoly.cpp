#include "nablalmo/zpoly.hpp"

#include <stdexcept>
#include <string>

#include "nablalmo/errors.hpp"

namespace nablalmo {

ZPoly::ZPoly(std::vector<Rational> coeffs, int prefactor_exponent)
    : coeffs_(std::move(coeffs)), prefactor_(prefactor_exponent) {
  if (prefactor_ < 0) throw std::invalid_argument("negative z prefactor exponent");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ZPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational ZPoly::z_coeff(int e) const {
  const int shifted = e - prefactor_;
  if (shifted < 0 || shifted % 2 != 0) return 0;
  return coeff(static_cast<std::size_t>(shifted / 2));
}

int ZPoly::z_degree() const {
  if (coeffs_.empty()) return -1;
  return prefactor_ + 2 * static_cast<int>(coeffs_.size() - 1);
}

Rational ZPoly::value_at_zero() const { return prefactor_ == 0 ? coeff(0) : Rational(0); }

HalfLaurent z_power(unsigned n) {
  const HalfLaurent z = HalfLaurent::monomial(1) - HalfLaurent::monomial(-1);
  return z.pow(n);
}

HalfLaurent ZPoly::expand() const {
  HalfLaurent result;
  if (coeffs_.empty()) return result;
  const HalfLaurent z2 = z_power(2);
  HalfLaurent basis = z_power(static_cast<unsigned>(prefactor_));
  for (const auto& b : coeffs_) {
    result += HalfLaurent(b) * basis;
    basis *= z2;
  }
  return result;
}

ZPoly rewrite_in_z(const HalfLaurent& p, int prefactor_exponent) {
  if (prefactor_exponent < 0) throw std::invalid_argument("negative z prefactor exponent");
  HalfLaurent rest = p;
  std::vector<Rational> coeffs;
  while (!rest.is_zero()) {
    // z^e has leading term s^e with coefficient 1.
    const int top = rest.max_exponent();
    const int offset = top - prefactor_exponent;
    if (offset < 0 || offset % 2 != 0) {
      throw MathError("polynomial is not in z^" + std::to_string(prefactor_exponent) +
                      "*Q[z^2] (cannot eliminate t^(" + std::to_string(top) + "/2))");
    }
    const auto k = static_cast<std::size_t>(offset / 2);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    const Rational c = rest.coeff(top);
    coeffs[k] += c;
    rest -= HalfLaurent(c) * z_power(static_cast<unsigned>(top));
  }
  return ZPoly(std::move(coeffs), prefactor_exponent);
}

}  // namespace nablalmo
