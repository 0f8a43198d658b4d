#pragma once

#include <string>

#include "difinv/invariant.hpp"

namespace difinv {

/// ASCII forms; integral power products print as parseable quotients, e.g.
/// "(3*a5*a3 - a4^2)^3/(27*a3^8)".
std::string to_text(const PowerProduct& p);
std::string to_text(const InvariantExpr& e);

std::string to_latex(const PowerProduct& p);
std::string to_latex(const InvariantExpr& e);

}  // namespace difinv
