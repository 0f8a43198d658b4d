#include "difinv/syntax.hpp"

#include <cctype>
#include <sstream>

#include "difinv/errors.hpp"

namespace difinv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    skip_space();
    if (at_end()) fail("empty expression");
    RatFunc value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  RatFunc expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    RatFunc value = term();
    if (negate) value = -value;
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RatFunc rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  RatFunc term() {
    RatFunc value = factor();
    while (true) {
      skip_space();
      char c = peek();
      if (c != '*' && c != '/') break;
      std::size_t op_at = pos_;
      ++pos_;
      RatFunc rhs = factor();
      if (c == '*') {
        value = value * rhs;
      } else {
        if (rhs.is_zero()) fail_at("division by zero", op_at);
        value = value / rhs;
      }
    }
    return value;
  }

  RatFunc factor() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    RatFunc base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      bool paren = accept('(');
      skip_space();
      bool negative = accept('-');
      unsigned long e = unsigned_integer();
      if (paren) expect(')');
      if (e > 10000) fail("exponent too large");
      int ei = negative ? -static_cast<int>(e) : static_cast<int>(e);
      if (ei < 0 && base.is_zero()) fail("zero to a negative power");
      base = pow(base, ei);
    }
    return base;
  }

  unsigned long unsigned_integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail_at("integer too large", start);
    return std::stoul(digits);
  }

  RatFunc number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    // A slash directly between digits is part of the literal.
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string den(text_.substr(dstart, pos_ - dstart));
      if (Integer(den) == 0) fail_at("zero denominator", dstart);
      Rational q{Integer(num), Integer(den)};
      q.canonicalize();
      return RatFunc(q);
    }
    return RatFunc(Rational(Integer(num)));
  }

  JetVar variable_token() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::size_t name_end = pos_;
    // derivative suffix, only directly attached
    if (peek() == '\'') {
      while (peek() == '\'') ++pos_;
    } else if (peek() == '^' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      std::string_view head = text_.substr(start, name_end - start);
      auto base = jet_var_from_name(head);
      if (base && base->is_jet()) {
        std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) fail_at("unterminated derivative order", pos_);
        pos_ = close + 1;
      }
    }
    std::string_view spelled = text_.substr(start, pos_ - start);
    auto v = jet_var_from_name(spelled);
    if (!v) fail_at("unknown variable '" + std::string(spelled) + "'", start);
    if (v->is_jet() && v->order() > max_jet_order()) {
      throw LimitError("jet order of " + std::string(spelled) +
                       " exceeds the configured maximum");
    }
    return *v;
  }

  RatFunc primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 'D' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      pos_ += 2;
      skip_space();
      std::size_t at = pos_;
      JetVar v = variable_token();
      if (!v.is_jet() || v.order() != 0) fail_at("D() expects an underived jet variable", at);
      expect(',');
      unsigned long k = unsigned_integer();
      expect(')');
      if (static_cast<int>(k) > max_jet_order()) {
        throw LimitError("jet order in D() exceeds the configured maximum");
      }
      return RatFunc(DiffPoly::var(v.with_order(static_cast<int>(k))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return RatFunc(DiffPoly::var(variable_token()));
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string coeff_text(const Rational& c) { return c.get_str(10); }

template <typename VarFn, typename PowFn>
std::string monomial_string(const Monomial& m, const std::string& sep, VarFn var_fn,
                            PowFn pow_fn) {
  std::string out;
  const auto& fs = m.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    if (!out.empty()) out += sep;
    out += it->exp == 1 ? var_fn(it->var) : pow_fn(it->var, it->exp);
  }
  return out;
}

std::string text_var(JetVar v) { return v.name(); }
std::string text_pow(JetVar v, unsigned e) { return v.name() + "^" + std::to_string(e); }

std::string latex_var(JetVar v) { return v.latex(); }
std::string latex_pow(JetVar v, unsigned e) {
  std::string base = v.latex();
  if (base.find('^') != std::string::npos) base = "{" + base + "}";
  return base + "^{" + std::to_string(e) + "}";
}

}  // namespace

RatFunc parse_rational(std::string_view text) { return Parser(text).run(); }

DiffPoly parse(std::string_view text) {
  RatFunc r = parse_rational(text);
  if (!r.is_polynomial()) throw ParseError("expression is not a polynomial", 0);
  return r.num();
}

std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  return monomial_string(m, "*", text_var, text_pow);
}

std::string to_text(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += coeff_text(mag);
    } else if (mag == 1) {
      out += to_text(t.mono);
    } else {
      out += coeff_text(mag) + "*" + to_text(t.mono);
    }
  }
  return out;
}

std::string to_text(const RatFunc& r) {
  if (r.is_polynomial()) return to_text(r.num());
  return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

std::string to_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string to_latex(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(t.mono, " ", latex_var, latex_pow);
    if (t.mono.is_one()) {
      out += to_latex(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_latex(mag) + " " + mono;
    }
  }
  return out;
}

std::string to_latex(const RatFunc& r) {
  if (r.is_polynomial()) return to_latex(r.num());
  return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
}

}  // namespace difinv
