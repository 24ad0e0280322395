#include "nablalmo/wheels.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nablalmo/errors.hpp"

namespace nablalmo {

EvenWheel::EvenWheel(int half_index) : n_(half_index) {
  if (half_index < 1) throw std::invalid_argument("wheel half index must be positive");
}

EvenWheel EvenWheel::with_legs(int legs) {
  if (legs < 2 || legs % 2 != 0) {
    throw std::invalid_argument("only even wheels w2, w4, ... exist, got w" + std::to_string(legs));
  }
  return EvenWheel(legs / 2);
}

WheelSeries::WheelSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative wheel series order");
}

Rational WheelSeries::coeff(EvenWheel w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void WheelSeries::set(EvenWheel w, const Rational& a) {
  if (w.degree() > order_) {
    throw std::invalid_argument("wheel w" + std::to_string(w.legs()) + " exceeds the series order " +
                                std::to_string(order_));
  }
  if (a == 0) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = a;
  }
}

int degree(const WheelPolynomial::Monomial& m) {
  int d = 0;
  for (const auto& w : m) d += w.degree();
  return d;
}

WheelPolynomial WheelPolynomial::constant(const Rational& c) { return monomial({}, c); }

WheelPolynomial WheelPolynomial::monomial(Monomial m, const Rational& c) {
  std::sort(m.begin(), m.end());
  WheelPolynomial p;
  p.add_term(std::move(m), c);
  return p;
}

Rational WheelPolynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WheelPolynomial::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WheelPolynomial WheelPolynomial::truncated(int max_degree) const {
  WheelPolynomial out;
  for (const auto& [m, c] : terms_)
    if (degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

WheelPolynomial& WheelPolynomial::operator+=(const WheelPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WheelPolynomial operator-(WheelPolynomial a, const WheelPolynomial& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

WheelPolynomial operator*(const WheelPolynomial& a, const WheelPolynomial& b) {
  WheelPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      WheelPolynomial::Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

WheelPolynomial operator*(const Rational& s, const WheelPolynomial& a) {
  WheelPolynomial out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

WheelPolynomial wheel_exp(const WheelPolynomial& p, int order) {
  if (p.constant_term() != 0) throw MathError("wheel_exp needs a zero constant term");
  const WheelPolynomial q = p.truncated(order);
  WheelPolynomial result = WheelPolynomial::constant(1);
  WheelPolynomial term = WheelPolynomial::constant(1);
  // Every wheel has degree >= 2, so q^k vanishes past k = order / 2.
  for (int k = 1; 2 * k <= order; ++k) {
    term = (Rational(1, k) * (term * q)).truncated(order);
    result += term;
  }
  return result;
}

WheelPolynomial wheel_log(const WheelPolynomial& u, int order) {
  if (u.constant_term() != 1) throw MathError("wheel_log needs constant term 1");
  const WheelPolynomial q = (u - WheelPolynomial::constant(1)).truncated(order);
  WheelPolynomial result;
  WheelPolynomial power = WheelPolynomial::constant(1);
  for (int k = 1; 2 * k <= order; ++k) {
    power = (power * q).truncated(order);
    result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return result;
}

HSeries w_nabla(const WheelPolynomial& p, int order) {
  HSeries out(order);
  for (const auto& [m, c] : p.terms()) {
    const Rational sign_scale = c * power(Rational(-2), static_cast<long>(m.size()));
    out += HSeries::monomial(degree(m), sign_scale, order);
  }
  return out;
}

HSeries w_nabla(const WheelSeries& w, int order) {
  HSeries exponent(order);
  for (const auto& [wheel, a] : w.coefficients()) exponent += HSeries::monomial(wheel.degree(), -2 * a, order);
  return exponent.exp();
}

WheelSeries wheels_from_series(const HSeries& f) {
  if (f.constant_term() != 1) throw MathError("series must have constant term 1");
  const HSeries l = f.log();
  if (!l.is_even()) throw MathError("log of the series has odd-order terms; it is not a value of W_nabla on wheels");
  WheelSeries w(f.order());
  for (int n = 1; 2 * n <= f.order(); ++n) w.set(EvenWheel(n), Rational(-1, 2) * l.coeff(2 * n));
  return w;
}

WheelSeries rescale_degree(const WheelSeries& w, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("rescaling factor must be positive");
  WheelSeries out(w.order());
  for (const auto& [wheel, a] : w.coefficients()) out.set(wheel, power(r, wheel.degree()) * a);
  return out;
}

HSeries rescale_degree(const HSeries& f, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("rescaling factor must be positive");
  return f.rescaled(r);
}

WheelSeries disjoint_union(const WheelSeries& a, const WheelSeries& b) {
  WheelSeries out(std::min(a.order(), b.order()));
  for (int n = 1; 2 * n <= out.order(); ++n) {
    const EvenWheel w(n);
    out.set(w, a.coeff(w) + b.coeff(w));
  }
  return out;
}

namespace {

void append_signed(std::ostringstream& out, bool first, const Rational& c, const std::string& body) {
  const bool negative = c < 0;
  out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
  const Rational magnitude = abs(c);
  if (body.empty()) {
    out << to_string(magnitude);
  } else if (magnitude == 1) {
    out << body;
  } else {
    out << to_string(magnitude) << " " << body;
  }
}

}  // namespace

std::string to_string(const WheelSeries& w) {
  std::ostringstream out;
  out << "exp( ";
  bool first = true;
  for (const auto& [wheel, a] : w.coefficients()) {
    append_signed(out, first, a, "w" + std::to_string(wheel.legs()));
    first = false;
  }
  if (first) out << "0";
  out << " )";
  return out.str();
}

std::string to_string(const WheelPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string body;
    for (const auto& w : m) body += (body.empty() ? "" : " ") + ("w" + std::to_string(w.legs()));
    append_signed(out, first, c, body);
    first = false;
  }
  return out.str();
}

}  // namespace nablalmo
