#include "nablalmo/half_laurent.hpp"

#include "nablalmo/errors.hpp"

namespace nablalmo {

HalfLaurent::HalfLaurent(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

HalfLaurent HalfLaurent::monomial(int half_exponent, const Rational& c) {
  HalfLaurent p;
  p.add_term(half_exponent, c);
  return p;
}

Rational HalfLaurent::coeff(int half_exponent) const {
  const auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HalfLaurent::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HalfLaurent::evaluate(const Rational& v) const {
  if (v == 0) {
    if (!terms_.empty() && min_exponent() < 0) {
      throw MathError("cannot evaluate a polynomial with negative powers at t^(1/2) = 0");
    }
    return coeff(0);
  }
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c * power(v, k);
  return sum;
}

HalfLaurent HalfLaurent::involution() const {
  HalfLaurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(-k, (k % 2 == 0) ? c : Rational(-c));
  return p;
}

HalfLaurent HalfLaurent::shifted(int half_exponent) const {
  HalfLaurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k + half_exponent, c);
  return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  HalfLaurent product;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) product.add_term(i + j, a * b);
  terms_ = std::move(product.terms_);
  return *this;
}

HalfLaurent HalfLaurent::pow(unsigned n) const {
  HalfLaurent result(1);
  for (unsigned i = 0; i < n; ++i) result *= *this;
  return result;
}

}  // namespace nablalmo
