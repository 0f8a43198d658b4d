#include "difinv/format.hpp"

#include <vector>

#include "difinv/syntax.hpp"

namespace difinv {

namespace {

bool is_atom(const DiffPoly& p) {
  if (p.size() != 1) return false;
  const Term& t = p.terms().front();
  return t.coeff == 1 && t.mono.factors().size() == 1 && t.mono.factors().front().exp == 1;
}

std::string text_power(const DiffPoly& base, const Rational& e) {
  std::string b = is_atom(base) ? to_text(base) : "(" + to_text(base) + ")";
  if (e == 1) return b;
  return b + "^" + (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")");
}

std::string latex_power(const DiffPoly& base, const Rational& e) {
  if (is_atom(base)) {
    std::string b = to_latex(base);
    if (e == 1) return b;
    return "{" + b + "}^{" + (e.get_den() == 1 ? e.get_str() : to_latex(e)) + "}";
  }
  std::string b = "\\left(" + to_latex(base) + "\\right)";
  if (e == 1) return b;
  return b + "^{" + (e.get_den() == 1 ? e.get_str() : to_latex(e)) + "}";
}

template <class Power>
std::pair<std::vector<std::string>, std::vector<std::string>> split(const PowerProduct& p, Power power) {
  std::vector<std::string> up, down;
  for (const auto& f : p.factors) {
    if (f.exponent > 0) up.push_back(power(f.base, f.exponent));
    if (f.exponent < 0) down.push_back(power(f.base, Rational(-f.exponent)));
  }
  return {up, down};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string to_text(const PowerProduct& p) {
  auto [up, down] = split(p, text_power);
  const Integer num = p.constant.get_num(), den = p.constant.get_den();
  if (num != 1 || up.empty()) up.insert(up.begin(), num.get_str());
  if (den != 1) down.insert(down.begin(), den.get_str());
  std::string top = join(up, "*");
  if (down.empty()) return top;
  std::string bottom = join(down, "*");
  return top + "/" + (down.size() > 1 ? "(" + bottom + ")" : bottom);
}

std::string to_text(const InvariantExpr& e) {
  return std::visit([](const auto& v) { return to_text(v); }, e);
}

std::string to_latex(const PowerProduct& p) {
  auto [up, down] = split(p, latex_power);
  const Integer num = abs(p.constant.get_num()), den = p.constant.get_den();
  const std::string sign = p.constant < 0 ? "-" : "";
  if (num != 1 || up.empty()) up.insert(up.begin(), num.get_str());
  if (den != 1) down.insert(down.begin(), den.get_str());
  std::string top = join(up, " ");
  if (down.empty()) return sign + top;
  return sign + "\\frac{" + top + "}{" + join(down, " ") + "}";
}

std::string to_latex(const InvariantExpr& e) {
  return std::visit([](const auto& v) { return to_latex(v); }, e);
}

}  // namespace difinv
