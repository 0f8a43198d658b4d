#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "difinv/diff_poly.hpp"
#include "difinv/rat_func.hpp"

namespace difinv {

/// Expression syntax
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := ['-'] primary ['^' exponent]
///   primary := number | variable | '(' expr ')' | 'D' '(' jetvar ',' K ')'
///   number  := digits ['/' digits]       (a rational literal)
///
/// Variables: x, z, k1 k2 k3 eps alpha beta gamma delta c, aJ, abarJ, xi, eta.
/// Jet variables take a derivative suffix: primes (a3'') or ^(K) (a3^(2)).
/// Division is exact rational-function division.
RatFunc parse_rational(std::string_view text);

/// Same grammar; throws ParseError if the result is not a polynomial.
DiffPoly parse(std::string_view text);

/// Canonical ASCII form; parse(to_text(p)) == p.
std::string to_text(const DiffPoly& p);
std::string to_text(const RatFunc& r);
std::string to_text(const Monomial& m);

/// LaTeX with jets spelled a_{3}', a_{3}'', a_{3}^{(k)}.
std::string to_latex(const DiffPoly& p);
std::string to_latex(const RatFunc& r);
std::string to_latex(const Rational& q);

inline std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << to_text(r); }

}  // namespace difinv
