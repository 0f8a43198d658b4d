#include "difinv/invariant.hpp"

#include <algorithm>
#include <array>

namespace difinv {

namespace {

constexpr std::array<std::string_view, 2> kKindNames = {"relative", "absolute"};
constexpr std::array<std::string_view, 5> kProvenanceNames = {"printed", "ansatz", "sequence",
                                                              "quotient", "repaired"};

}  // namespace

Rational PowerProduct::index() const {
  Rational total = 0;
  for (const auto& f : factors) total += f.exponent * f.index;
  return total;
}

bool PowerProduct::integral() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PowerFactor& f) { return f.exponent.get_den() == 1; });
}

std::optional<RatFunc> PowerProduct::expand() const {
  if (!integral()) return std::nullopt;
  DiffPoly num(constant);
  DiffPoly den(1);
  for (const auto& f : factors) {
    long e = f.exponent.get_num().get_si();
    if (e >= 0) {
      num = num * pow(f.base, static_cast<unsigned>(e));
    } else {
      den = den * pow(f.base, static_cast<unsigned>(-e));
    }
  }
  return RatFunc(std::move(num), std::move(den));
}

int PowerProduct::order() const {
  int best = -1;
  for (const auto& f : factors) best = std::max(best, max_order(f.base));
  return best;
}

std::string_view to_string(InvariantKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::string_view to_string(Provenance p) {
  return kProvenanceNames[static_cast<std::size_t>(p)];
}

std::optional<InvariantKind> kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == s) return static_cast<InvariantKind>(i);
  }
  return std::nullopt;
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kProvenanceNames.size(); ++i) {
    if (kProvenanceNames[i] == s) return static_cast<Provenance>(i);
  }
  return std::nullopt;
}

int expr_order(const InvariantExpr& e) {
  return std::visit(
      [](const auto& v) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PowerProduct>) {
          return v.order();
        } else {
          return max_order(v);
        }
      },
      e);
}

std::optional<RatFunc> as_rational(const InvariantExpr& e) {
  if (const auto* p = std::get_if<DiffPoly>(&e)) return RatFunc(*p);
  if (const auto* r = std::get_if<RatFunc>(&e)) return *r;
  return std::get<PowerProduct>(e).expand();
}

Invariant make_relative(std::string name, DiffPoly expr, Rational index, Provenance provenance) {
  Invariant inv;
  inv.name = std::move(name);
  Weight w = weight(expr);
  if (w.isobaric()) inv.weight = w.value;
  inv.order = max_order(expr);
  inv.expr = std::move(expr);
  inv.kind = InvariantKind::Relative;
  inv.index = std::move(index);
  inv.provenance = provenance;
  return inv;
}

Invariant make_absolute(std::string name, InvariantExpr expr, Provenance provenance) {
  Invariant inv;
  inv.name = std::move(name);
  inv.order = expr_order(expr);
  // An absolute invariant num/den carries the common weight of both parts.
  if (const auto* pp = std::get_if<PowerProduct>(&expr)) {
    // read off factor by factor; expanding large powers just for this is wasteful
    Rational up = 0, down = 0;
    bool graded = pp->integral();
    for (const auto& f : pp->factors) {
      Weight w = weight(f.base);
      if (!w.isobaric()) {
        graded = false;
        break;
      }
      (f.exponent > 0 ? up : down) += abs(f.exponent) * w.value;
    }
    if (graded && up == down) inv.weight = static_cast<int>(up.get_num().get_si());
  } else if (auto r = as_rational(expr); r && !r->is_zero()) {
    Weight wn = weight(r->num()), wd = weight(r->den());
    if (wn.isobaric() && wd.isobaric() && wn.value == wd.value) inv.weight = wn.value;
  }
  inv.expr = std::move(expr);
  inv.kind = InvariantKind::Absolute;
  inv.index = 0;
  inv.provenance = provenance;
  return inv;
}

}  // namespace difinv
