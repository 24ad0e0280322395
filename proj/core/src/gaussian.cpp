#include "nablalmo/gaussian.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "nablalmo/errors.hpp"

namespace nablalmo {

Strut::Strut(Leg a, Leg b) : first(std::move(a)), second(std::move(b)) {
  if (second < first) std::swap(first, second);
}

StrutMonomial make_monomial(std::vector<Strut> struts) {
  std::sort(struts.begin(), struts.end());
  return struts;
}

int monomial_weight(const StrutMonomial& m, const std::function<int(const Leg&)>& leg_weight) {
  int w = 0;
  for (const auto& s : m) w += leg_weight(s.first) + leg_weight(s.second);
  return w;
}

StrutPolynomial StrutPolynomial::one() { return monomial({}, 1); }

StrutPolynomial StrutPolynomial::monomial(StrutMonomial m, const Rational& c) {
  StrutPolynomial p;
  p.add_term(make_monomial(std::move(m)), c);
  return p;
}

Rational StrutPolynomial::coeff(const StrutMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void StrutPolynomial::add_term(StrutMonomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

StrutPolynomial& StrutPolynomial::operator+=(const StrutPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

StrutPolynomial& StrutPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

namespace {

StrutMonomial merge(const StrutMonomial& a, const StrutMonomial& b) {
  StrutMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StrutPolynomial truncated_product(const StrutPolynomial& a, const StrutPolynomial& b,
                                  const std::function<int(const Leg&)>& leg_weight, int max_weight) {
  StrutPolynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    const int wa = monomial_weight(ma, leg_weight);
    if (wa > max_weight) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (wa + monomial_weight(mb, leg_weight) > max_weight) continue;
      out.add_term(merge(ma, mb), ca * cb);
    }
  }
  return out;
}

}  // namespace

StrutPolynomial operator*(const StrutPolynomial& a, const StrutPolynomial& b) {
  StrutPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
  return out;
}

StrutPolynomial StrutPolynomial::truncated(const std::function<int(const Leg&)>& leg_weight, int max_weight) const {
  StrutPolynomial out;
  for (const auto& [m, c] : terms_)
    if (monomial_weight(m, leg_weight) <= max_weight) out.terms_.emplace(m, c);
  return out;
}

StrutPolynomial quadratic_exponent(const std::vector<Leg>& legs, const QMatrix& q) {
  if (q.rows() != legs.size() || !q.is_symmetric()) {
    throw std::invalid_argument("strut quadratic form must be symmetric and match its labels");
  }
  StrutPolynomial p;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    p.add_term({Strut(legs[i], legs[i])}, q(i, i) / 2);
    for (std::size_t j = i + 1; j < legs.size(); ++j) p.add_term({Strut(legs[i], legs[j])}, q(i, j));
  }
  return p;
}

StrutPolynomial truncated_exp(const StrutPolynomial& p, const std::function<int(const Leg&)>& leg_weight,
                              int max_weight) {
  StrutPolynomial result = StrutPolynomial::one();
  for (const auto& [m, c] : p.terms()) {
    if (m.size() != 1) throw std::invalid_argument("truncated_exp expects a linear combination of struts");
    const int w = monomial_weight(m, leg_weight);
    if (w <= 0) throw std::invalid_argument("every strut in an exponent needs positive weight");
    // sum_k (c s)^k / k!
    StrutPolynomial factor = StrutPolynomial::one();
    StrutMonomial power;
    Rational coeff = 1;
    for (int k = 1; k * w <= max_weight; ++k) {
      power.push_back(m.front());
      coeff = coeff * c / k;
      factor.add_term(power, coeff);
    }
    result = truncated_product(result, factor, leg_weight, max_weight);
  }
  return result;
}

StrutPolynomial strut_exponential(const StrutQuadratic& quadratic, int max_degree) {
  std::vector<Leg> legs;
  for (const auto& l : quadratic.labels) legs.push_back({l, false});
  return truncated_exp(quadratic_exponent(legs, quadratic.q), [](const Leg&) { return 1; }, 2 * max_degree);
}

namespace {

// One monomial of the left factor, split for gluing.
struct LeftShape {
  StrutMonomial passthrough;                        // struts with both legs in X''
  std::map<std::string, std::vector<Leg>> free_ends;  // x -> the X'' leg across each x-leg
};

// One monomial of the right factor: struts (∂x, ∂y) as label pairs.
struct RightShape {
  std::vector<std::pair<std::string, std::string>> struts;
  std::map<std::string, std::vector<std::pair<std::size_t, int>>> slots;  // x -> (strut, end)
};

LeftShape shape_left(const StrutMonomial& m, const std::set<std::string>& surgery) {
  LeftShape shape;
  for (const Strut& s : m) {
    if (s.first.boundary || s.second.boundary) {
      throw MathError("left factor of the pairing carries a ∂-labeled leg " + to_string(s));
    }
    const bool a = surgery.count(s.first.label) > 0;
    const bool b = surgery.count(s.second.label) > 0;
    if (a && b) {
      throw MathError("left factor contains the strut " + to_string(s) +
                      " joining two surgery legs; gluing it would close a circle");
    }
    if (!a && !b) {
      shape.passthrough.push_back(s);
    } else if (a) {
      shape.free_ends[s.first.label].push_back(s.second);
    } else {
      shape.free_ends[s.second.label].push_back(s.first);
    }
  }
  return shape;
}

RightShape shape_right(const StrutMonomial& m, const std::set<std::string>& surgery) {
  RightShape shape;
  for (const Strut& s : m) {
    for (const Leg* leg : {&s.first, &s.second}) {
      if (!leg->boundary || !surgery.count(leg->label)) {
        throw MathError("right factor of the pairing must have only ∂-legs over surgery labels, found " +
                        to_string(s));
      }
    }
    const std::size_t f = shape.struts.size();
    shape.struts.emplace_back(s.first.label, s.second.label);
    shape.slots[s.first.label].emplace_back(f, 0);
    shape.slots[s.second.label].emplace_back(f, 1);
  }
  return shape;
}

bool same_leg_counts(const LeftShape& l, const RightShape& r) {
  if (l.free_ends.size() != r.slots.size()) return false;
  for (const auto& [x, ends] : l.free_ends) {
    const auto it = r.slots.find(x);
    if (it == r.slots.end() || it->second.size() != ends.size()) return false;
  }
  return true;
}

// Sums over bijections, one surgery label at a time.
class Gluer {
 public:
  Gluer(const LeftShape& left, const RightShape& right, const Rational& coeff, StrutPolynomial& out)
      : left_(left), right_(right), coeff_(coeff), out_(out), ends_(right.struts.size()) {
    for (const auto& [x, slots] : right.slots) labels_.push_back(x);
  }

  void run() { recurse(0); }

 private:
  void recurse(std::size_t label_index) {
    if (label_index == labels_.size()) {
      StrutMonomial m = left_.passthrough;
      for (const auto& e : ends_) m.emplace_back(*e[0], *e[1]);
      out_.add_term(make_monomial(std::move(m)), coeff_);
      return;
    }
    const std::string& x = labels_[label_index];
    const auto& slots = right_.slots.at(x);
    const auto& free = left_.free_ends.at(x);
    std::vector<std::size_t> perm(free.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t j = 0; j < slots.size(); ++j) {
        ends_[slots[j].first][static_cast<std::size_t>(slots[j].second)] = &free[perm[j]];
      }
      recurse(label_index + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const LeftShape& left_;
  const RightShape& right_;
  const Rational& coeff_;
  StrutPolynomial& out_;
  std::vector<std::string> labels_;
  std::vector<std::array<const Leg*, 2>> ends_;
};

}  // namespace

StrutPolynomial wick_pair(const StrutPolynomial& left, const StrutPolynomial& right,
                          const std::vector<std::string>& surgery_labels) {
  const std::set<std::string> surgery(surgery_labels.begin(), surgery_labels.end());
  std::vector<std::pair<LeftShape, Rational>> lefts;
  for (const auto& [m, c] : left.terms()) lefts.emplace_back(shape_left(m, surgery), c);
  std::vector<std::pair<RightShape, Rational>> rights;
  for (const auto& [m, c] : right.terms()) rights.emplace_back(shape_right(m, surgery), c);

  StrutPolynomial out;
  for (const auto& [l, cl] : lefts)
    for (const auto& [r, cr] : rights) {
      if (!same_leg_counts(l, r)) continue;
      const Rational c = cl * cr;
      Gluer(l, r, c, out).run();
    }
  return out;
}

StrutPolynomial gaussian_integral(const FramedLinkMatrix& m, int max_degree) {
  const QMatrix inv_block = [&] {
    try {
      return inverse(m.surgery_block());
    } catch (const MathError&) {
      throw MathError("surgery block is singular; the surgered manifold is not a rational homology sphere");
    }
  }();
  const std::set<std::string> surgery = [&] {
    const auto s = m.surgery_labels();
    return std::set<std::string>(s.begin(), s.end());
  }();

  // Left: exp of everything except the X'-X' block.
  QMatrix q_left = m.entries();
  for (auto i : m.surgery_indices())
    for (auto j : m.surgery_indices()) q_left(i, j) = 0;
  std::vector<Leg> legs;
  for (const auto& l : m.labels()) legs.push_back({l, false});
  const auto residual_weight = [&](const Leg& leg) { return !leg.boundary && !surgery.count(leg.label) ? 1 : 0; };
  const StrutPolynomial left = truncated_exp(quadratic_exponent(legs, q_left), residual_weight, 2 * max_degree);

  // Right: exp(-(1/2) sum l^{xy} strut(∂x, ∂y)).
  std::vector<Leg> boundary_legs;
  for (const auto& l : m.surgery_labels()) boundary_legs.push_back({l, true});
  const auto boundary_weight = [](const Leg& leg) { return leg.boundary ? 1 : 0; };
  const StrutPolynomial right =
      truncated_exp(quadratic_exponent(boundary_legs, Rational(-1) * inv_block), boundary_weight, 2 * max_degree);

  return wick_pair(left, right, m.surgery_labels()).truncated(residual_weight, 2 * max_degree);
}

StrutQuadratic strut_part_of_aarhus(const FramedLinkMatrix& m) {
  if (!m.integral_surgery()) throw MathError("surgery framings must be integers");
  LabeledMatrix l = surgery_transform(m);
  return {std::move(l.labels), std::move(l.entries)};
}

StrutQuadratic tangle_strut_part(const SeifertMatrix& v) {
  StrutQuadratic out;
  for (std::size_t i = 0; i < v.size(); ++i) out.labels.push_back(std::to_string(i + 1));
  out.q = decompose(v).symmetric;
  return out;
}

StrutQuadratic gaussian_pair(const FramedLinkMatrix& m) {
  const StrutPolynomial integral = gaussian_integral(m, 1);
  const auto residual = m.residual_labels();
  const std::size_t n = residual.size();
  if (integral.coeff({}) != 1) throw MathError("Gaussian pairing lost its constant term");
  StrutQuadratic out{residual, QMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Leg li{residual[i], false};
    out.q(i, i) = 2 * integral.coeff({Strut(li, li)});
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational c = integral.coeff({Strut(li, Leg{residual[j], false})});
      out.q(i, j) = c;
      out.q(j, i) = c;
    }
  }
  return out;
}

std::string to_string(const Leg& leg) { return (leg.boundary ? "∂" : "") + leg.label; }

std::string to_string(const Strut& s) { return "s(" + to_string(s.first) + "," + to_string(s.second) + ")"; }

std::string to_string(const StrutPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const Rational magnitude = abs(c);
    std::string mono;
    for (const auto& s : m) mono += (mono.empty() ? "" : "*") + to_string(s);
    if (mono.empty()) {
      out << to_string(magnitude);
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << to_string(magnitude) << "*" << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace nablalmo
