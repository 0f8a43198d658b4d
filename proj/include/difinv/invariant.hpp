#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "difinv/rat_func.hpp"

namespace difinv {

/// One factor base^exponent of a power product. `index` is the index of the
/// base as a relative invariant.
struct PowerFactor {
  std::string name;
  DiffPoly base;
  Rational exponent;
  Rational index;
};

/// constant * prod base_i^exponent_i, with possibly fractional exponents.
/// Fractional powers stay symbolic; expand() only succeeds when every
/// exponent is an integer.
struct PowerProduct {
  Rational constant{1};
  std::vector<PowerFactor> factors;

  Rational index() const;
  bool integral() const;
  std::optional<RatFunc> expand() const;
  int order() const;
};

enum class InvariantKind { Relative, Absolute };
enum class Provenance { Printed, Ansatz, Sequence, Quotient, Repaired };

std::string_view to_string(InvariantKind kind);
std::string_view to_string(Provenance p);
std::optional<InvariantKind> kind_from_string(std::string_view s);
std::optional<Provenance> provenance_from_string(std::string_view s);

using InvariantExpr = std::variant<DiffPoly, RatFunc, PowerProduct>;

struct Invariant {
  std::string name;
  InvariantExpr expr;
  InvariantKind kind = InvariantKind::Relative;
  Rational index{0};
  std::optional<int> weight;
  int order = -1;
  Provenance provenance = Provenance::Printed;
};

/// Builds a record, filling weight and order from the expression.
Invariant make_relative(std::string name, DiffPoly expr, Rational index, Provenance provenance);
Invariant make_absolute(std::string name, InvariantExpr expr, Provenance provenance);

int expr_order(const InvariantExpr& e);

/// The expression as a rational function; nullopt for a non-integral
/// power product.
std::optional<RatFunc> as_rational(const InvariantExpr& e);

}  // namespace difinv
