#include "nablalmo/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "nablalmo/errors.hpp"

namespace nablalmo {

namespace {

// Appends "c*var_text" with sign handling; `first` controls the leading
// separator.
void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& var_text) {
  const bool negative = c < 0;
  const Rational magnitude = abs(c);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (var_text.empty()) {
    out << to_string(magnitude);
  } else if (magnitude == 1) {
    out << var_text;
  } else {
    out << to_string(magnitude) << "*" << var_text;
  }
}

std::string t_power_text(int k) {
  if (k == 0) return "";
  if (k % 2 != 0) return "t^(" + std::to_string(k) + "/2)";
  const int e = k / 2;
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

std::string power_text(char var, int e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

struct Term {
  Rational coeff;
  char var = 0;  // 0 for a constant term
  Rational exponent = 0;
  std::size_t position = 0;
};

struct ParsedSum {
  std::vector<Term> terms;
  std::optional<int> big_o;  // N in O(h^N)
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedSum parse_sum() {
    ParsedSum sum;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      const std::size_t term_start = pos_;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      if (peek() == 'O') {
        if (sign < 0) throw ParseError("negated O-term", term_start);
        sum.big_o = parse_big_o();
        skip_ws();
        if (!at_end()) throw ParseError("trailing input after O-term", pos_);
        break;
      }
      Term t = parse_term();
      t.position = term_start;
      if (sign < 0) t.coeff = -t.coeff;
      sum.terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return sum;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
    skip_ws();
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    std::string d(text_.substr(start, pos_ - start));
    skip_ws();
    return d;
  }

  Rational unsigned_rational() {
    const std::size_t start = pos_;
    std::string s = digits();
    if (peek() == '/') {
      ++pos_;
      s += "/" + digits();
    }
    try {
      return parse_rational(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  Rational exponent() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      Rational e = unsigned_rational();
      expect(')');
      return sign * e;
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return sign * parse_rational(digits());
  }

  Term parse_term() {
    Term t;
    t.coeff = 1;
    bool has_coeff = false;
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = unsigned_rational();
      has_coeff = true;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError("expected a variable after '*'", pos_);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      t.var = peek();
      ++pos_;
      skip_ws();
      t.exponent = 1;
      if (peek() == '^') {
        ++pos_;
        t.exponent = exponent();
      }
    } else if (!has_coeff) {
      throw ParseError("expected a coefficient or a variable", pos_);
    }
    return t;
  }

  int parse_big_o() {
    ++pos_;  // 'O'
    expect('(');
    if (peek() != 'h') throw ParseError("expected 'h' inside O(...)", pos_);
    ++pos_;
    skip_ws();
    Rational e = 1;
    if (peek() == '^') {
      ++pos_;
      e = exponent();
    }
    expect(')');
    if (!is_integer(e) || e < 1) throw ParseError("O-term exponent must be a positive integer", pos_);
    return static_cast<int>(e.get_num().get_si());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_var(const Term& t, char var) {
  if (t.var != 0 && t.var != var) {
    throw ParseError(std::string("unexpected variable '") + t.var + "', expected '" + var + "'", t.position);
  }
}

int integer_exponent(const Term& t) {
  if (t.var == 0) return 0;
  if (!is_integer(t.exponent)) throw ParseError("exponent must be an integer", t.position);
  if (abs(t.exponent) > 1000000) throw ParseError("exponent out of range", t.position);
  return static_cast<int>(t.exponent.get_num().get_si());
}

}  // namespace

std::string to_string(const HalfLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    append_term(out, first, c, t_power_text(k));
    first = false;
  }
  return out.str();
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    append_term(out, first, c, power_text('z', p.prefactor_exponent() + 2 * static_cast<int>(k)));
    first = false;
  }
  return out.str();
}

std::string to_string(const HSeries& f) {
  std::ostringstream out;
  bool first = true;
  for (int m = 0; m <= f.order(); ++m) {
    const Rational& c = f.coeffs()[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    append_term(out, first, c, power_text('h', m));
    first = false;
  }
  if (first) out << "0";
  out << " + O(h^" << f.order() + 1 << ")";
  return out.str();
}

HalfLaurent parse_half_laurent(std::string_view text) {
  const ParsedSum sum = Parser(text).parse_sum();
  if (sum.big_o) throw ParseError("O-term is not allowed in a polynomial");
  HalfLaurent p;
  for (const Term& t : sum.terms) {
    require_var(t, 't');
    const Rational twice = 2 * t.exponent;
    if (!is_integer(twice)) throw ParseError("exponent of t must be a multiple of 1/2", t.position);
    if (abs(twice) > 1000000) throw ParseError("exponent out of range", t.position);
    p += HalfLaurent::monomial(static_cast<int>(twice.get_num().get_si()), t.coeff);
  }
  return p;
}

ZPoly parse_zpoly(std::string_view text) {
  const ParsedSum sum = Parser(text).parse_sum();
  if (sum.big_o) throw ParseError("O-term is not allowed in a polynomial");
  std::map<int, Rational> by_exponent;
  std::optional<int> parity;
  for (const Term& t : sum.terms) {
    require_var(t, 'z');
    const int e = integer_exponent(t);
    if (e < 0) throw ParseError("negative power of z", t.position);
    by_exponent[e] += t.coeff;
  }
  for (const auto& [e, c] : by_exponent) {
    if (c == 0) continue;
    if (parity && *parity != e % 2) throw ParseError("z-polynomial mixes even and odd powers");
    parity = e % 2;
  }
  const int s = parity.value_or(0);
  std::vector<Rational> b;
  for (const auto& [e, c] : by_exponent) {
    if (c == 0) continue;
    const auto k = static_cast<std::size_t>((e - s) / 2);
    if (b.size() <= k) b.resize(k + 1);
    b[k] = c;
  }
  return ZPoly(std::move(b), s);
}

HSeries parse_hseries(std::string_view text, int default_order) {
  const ParsedSum sum = Parser(text).parse_sum();
  const int order = sum.big_o ? *sum.big_o - 1 : default_order;
  HSeries f(order);
  for (const Term& t : sum.terms) {
    require_var(t, 'h');
    const int e = integer_exponent(t);
    if (e < 0) throw ParseError("negative power of h", t.position);
    f += HSeries::monomial(e, t.coeff, order);
  }
  return f;
}

}  // namespace nablalmo
