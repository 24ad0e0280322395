#include "nablalmo/seifert.hpp"

#include <stdexcept>
#include <utility>

#include "nablalmo/errors.hpp"

namespace nablalmo {

SeifertMatrix::SeifertMatrix(QMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw std::invalid_argument("Seifert matrix must be square");
}

SeifertDecomposition decompose(const SeifertMatrix& v) {
  const QMatrix& m = v.entries();
  const QMatrix mt = m.transpose();
  return {m - mt, Rational(1, 2) * (m + mt)};
}

namespace {

// Simultaneous row and column operations on a skew matrix, mirrored as row
// operations on the accumulated transform.
class CongruenceReducer {
 public:
  explicit CongruenceReducer(ZMatrix f) : a_(std::move(f)), p_(ZMatrix::identity(a_.rows())) {}

  std::size_t n() const { return a_.rows(); }
  const Integer& at(std::size_t i, std::size_t j) const { return a_(i, j); }

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n(); ++k) std::swap(a_(i, k), a_(j, k));
    for (std::size_t k = 0; k < n(); ++k) std::swap(a_(k, i), a_(k, j));
    for (std::size_t k = 0; k < n(); ++k) std::swap(p_(i, k), p_(j, k));
  }

  // index i += c * index j
  void add(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < n(); ++k) a_(i, k) += c * a_(j, k);
    for (std::size_t k = 0; k < n(); ++k) a_(k, i) += c * a_(k, j);
    for (std::size_t k = 0; k < n(); ++k) p_(i, k) += c * p_(j, k);
  }

  ZMatrix take_transform() { return std::move(p_); }

 private:
  ZMatrix a_;
  ZMatrix p_;
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SkewNormalForm skew_normal_form(const ZMatrix& f) {
  if (!f.is_skew_symmetric()) throw MathError("intersection form is not skew-symmetric");
  const std::size_t n = f.rows();
  CongruenceReducer r(f);
  SkewNormalForm form;
  std::size_t k = 0;
  while (k + 1 < n) {
    // Pivot: least |entry| in the trailing block, lowest row then column.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (r.at(i, j) == 0) continue;
        if (pr == n || abs(r.at(i, j)) < abs(r.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr == n) break;
    // Skew symmetry puts the first hit strictly above the diagonal.
    r.swap(k, pr);
    r.swap(k + 1, pc == k ? pr : pc);
    if (r.at(k, k + 1) < 0) r.swap(k, k + 1);
    const Integer d = r.at(k, k + 1);

    bool reduced = true;
    for (std::size_t j = k + 2; j < n; ++j) {
      r.add(j, k + 1, -floor_div(r.at(k, j), d));
      r.add(j, k, floor_div(r.at(k + 1, j), d));
      if (r.at(k, j) != 0 || r.at(k + 1, j) != 0) reduced = false;
    }
    if (!reduced) continue;  // a smaller remainder becomes the next pivot

    // Divisibility: pull an offending row into row k so its remainder
    // becomes a smaller pivot.
    bool divides_all = true;
    for (std::size_t i = k + 2; i < n && divides_all; ++i)
      for (std::size_t j = k + 2; j < n; ++j) {
        if (r.at(i, j) % d != 0) {
          r.add(k, i, 1);
          divides_all = false;
          break;
        }
      }
    if (!divides_all) continue;

    form.elementary_divisors.push_back(d);
    k += 2;
  }
  form.corank = n - 2 * form.elementary_divisors.size();
  form.transform = r.take_transform();
  return form;
}

ZMatrix standard_skew_form(const SkewNormalForm& form) {
  const std::size_t n = 2 * form.elementary_divisors.size() + form.corank;
  ZMatrix s(n, n);
  for (std::size_t b = 0; b < form.elementary_divisors.size(); ++b) {
    s(2 * b, 2 * b + 1) = form.elementary_divisors[b];
    s(2 * b + 1, 2 * b) = -form.elementary_divisors[b];
  }
  return s;
}

RealizabilityReport realizability_report(const SeifertMatrix& v) {
  const SeifertDecomposition parts = decompose(v);
  RealizabilityReport report;
  const std::size_t n = v.size();
  if (v.integral()) {
    const SkewNormalForm form = skew_normal_form(to_integer(parts.skew));
    report.elementary_divisors = form.elementary_divisors;
    bool unimodular = true;
    for (const auto& d : form.elementary_divisors) unimodular = unimodular && d == 1;
    report.realizable_in_s3 = unimodular;
    report.genus = form.elementary_divisors.size();
    report.boundary_components = form.corank + 1;
  } else {
    const std::size_t r = rank(parts.skew);
    report.genus = r / 2;
    report.boundary_components = n - r + 1;
  }
  return report;
}

}  // namespace nablalmo
