#include "difinv/catalog.hpp"

#include <array>

#include "difinv/ansatz.hpp"
#include "difinv/errors.hpp"
#include "difinv/syntax.hpp"
#include "difinv/transform.hpp"

namespace difinv {

namespace {

constexpr const char* kS3 =
    "5*a4^3 + 9*a3^2*a5' - 3*a4*a3*(5*a5 + 2*a4') + 3*a4^2*a3'";
constexpr const char* kS91 =
    "35*a4^5 + 45*a4^4*a3' - 10*a4^3*a3*(11*a5 + 11*a4' + 3*a3'') + 18*a3^4*a5^(3)";
// typeset with the cube inside the bracket
constexpr const char* kS92 =
    "-12*a4*a3^3*(9*a5'' + a4^(3) + 6*a4^2*a3^2*(33*a5' + 11*a4'' + a3^(3))^3)";
constexpr const char* kS92Regrouped =
    "-12*a4*a3^3*(9*a5'' + a4^(3)) + 6*a4^2*a3^2*(33*a5' + 11*a4'' + a3^(3))";

CatalogEntry relative(std::string name, const std::string& text, int index) {
  CatalogEntry e;
  e.base = parse(text);
  e.printed = make_relative(std::move(name), e.base, index, Provenance::Printed);
  e.printed_text = text;
  e.weight = index;
  e.order = max_order(e.base);
  return e;
}

PowerProduct quotient(const std::string& name, const DiffPoly& base, int exponent, int constant,
                      int a3_power, int weight) {
  PowerProduct pp;
  pp.constant = Rational(1, constant);
  pp.factors = {{"N(" + name + ")", base, Rational(exponent), Rational(weight)},
                {"S0", parse("a3"), Rational(-a3_power), Rational(3)}};
  return pp;
}

CatalogEntry absolute(std::string name, const std::string& base_text, int exponent, int constant,
                      int a3_power) {
  CatalogEntry e;
  e.base = parse(base_text);
  e.weight = 3 * a3_power / exponent;
  e.order = max_order(e.base);
  std::string den = (constant == 1 ? "" : std::to_string(constant) + "*") + "a3^" +
                    std::to_string(a3_power);
  e.printed_text = "(" + base_text + ")" + (exponent == 1 ? "" : "^" + std::to_string(exponent)) +
                   "/" + (constant == 1 ? den : "(" + den + ")");
  e.printed = make_absolute(name, quotient(name, e.base, exponent, constant, a3_power, e.weight),
                            Provenance::Printed);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(relative("S0", "a3", 3));
  c.push_back(relative("R0", "3*a5*a3 - a4^2", 8));
  c.push_back(relative("S1", "-a4 + a3'", 4));
  c.push_back(relative("S2", "6*a3*a4' - a4^2 - 6*a4*a3'", 8));
  c.push_back(relative("S3", kS3, 12));
  c.push_back(absolute("I0", "3*a5*a3 - a4^2", 3, 27, 8));
  c.push_back(absolute("I1", "-a4 + a3'", 3, 1, 4));
  c.push_back(absolute("I2", "6*a3*a4' - a4^2 - 6*a4*a3'", 3, 216, 8));
  c.push_back(absolute("I3", kS3, 1, 9, 4));
  c.push_back(absolute("I4", "7*a4^2 - 14*a4*a3' + 6*a3*a3''", 3, 216, 8));
  c.push_back(absolute("I5", "4*a4^3 + 24*a4^2*a3' + 9*a3^2*a4'' - 9*a4*a3*(3*a4' + a3'')", 1, 9, 4));
  c.push_back(absolute("I6",
                       "-18*a4^4 - 18*a4^3*a3' + 18*a3^3*a5'' - 6*a4*a3^2*(11*a5' + 2*a4'') + "
                       "a4^2*a3*(55*a5 + 40*a4' + 6*a3'')",
                       3, 5832, 16));
  c.push_back(absolute("I7", "-14*a4^3 + 42*a4^2*a3' - 36*a4*a3*a3'' + 9*a3^2*a3^(3)", 1, 9, 4));
  c.push_back(absolute("I8",
                       "-2*a4^4 - 12*a4^3*a3' + 3*a4^2*a3*(5*a4' + 3*a3'') + 2*a3^3*a4^(3) - "
                       "2*a4*a3^2*(5*a4'' + a3^(3))",
                       3, 8, 16));
  CatalogEntry i9 = absolute("I9", std::string(kS91) + " + " + kS92, 3, 5832, 20);
  i9.alternate = parse(std::string(kS91) + " + " + kS92Regrouped);
  i9.alternate_text = std::string(kS91) + " + " + kS92Regrouped;
  c.push_back(std::move(i9));
  return c;
}

constexpr std::array<std::string_view, 6> kRouteNames = {
    "none", "printed-support", "alternate-reading", "full-space", "ambiguous", "trivial"};

int monomial_weight(const Monomial& m) {
  Weight w = weight(DiffPoly::monomial(m, Rational(1)));
  return w.isobaric() ? w.value : -1;
}

Invariant rebuild(const CatalogEntry& e, const DiffPoly& base) {
  if (e.printed.kind == InvariantKind::Relative) {
    return make_relative(e.printed.name, base, e.printed.index, Provenance::Repaired);
  }
  PowerProduct pp = std::get<PowerProduct>(e.printed.expr);
  pp.factors[0].base = base;
  return make_absolute(e.printed.name, std::move(pp), Provenance::Repaired);
}

EntryReport examine(const CatalogEntry& e, const GeneratorContext& ctx, Exec exec) {
  EntryReport r;
  r.entry = &e;
  r.verdict = check(e.printed, ctx.field, ctx.mu);
  Weight w = weight(e.base);
  r.isobaric = w.isobaric() && w.value == e.weight;
  if (e.printed.kind == InvariantKind::Relative) {
    r.inferred_index = infer_index(e.base, ctx.field, ctx.mu);
  }
  if (r.verdict.verified()) return r;

  const Rational index(e.weight);
  std::optional<DiffPoly> repair;

  std::vector<Monomial> support;
  for (const auto& t : e.base.terms()) {
    if (monomial_weight(t.mono) == e.weight) support.push_back(t.mono);
  }
  if (!support.empty()) {
    auto res = find_relative_invariants(e.weight, e.order, ctx.field, ctx.mu, exec, support);
    if (!res.basis.empty()) {
      repair = res.basis.front();
      r.route = RepairRoute::PrintedSupport;
    }
  }
  if (!repair && e.alternate) {
    if (check_relative(*e.alternate, index, ctx.field, ctx.mu).verified()) {
      repair = *e.alternate;
    } else {
      // same support, coefficients re-solved
      std::vector<Monomial> alt;
      for (const auto& t : e.alternate->terms()) alt.push_back(t.mono);
      auto res = find_relative_invariants(e.weight, e.order, ctx.field, ctx.mu, exec, alt);
      if (res.basis.size() == 1) repair = res.basis.front();
    }
    if (repair) r.route = RepairRoute::AlternateReading;
  }
  if (!repair) {
    auto res = find_relative_invariants(e.weight, e.order, ctx.field, ctx.mu, exec);
    r.space_basis = res.basis;
    r.space_dimension = res.basis.size();
    if (res.basis.size() == 1) {
      repair = res.basis.front();
      r.route = RepairRoute::FullSpace;
    } else {
      r.route = res.basis.empty() ? RepairRoute::Trivial : RepairRoute::Ambiguous;
    }
  }
  if (repair) {
    r.scale = scalar_multiple(*repair, e.base);
    r.repaired = rebuild(e, *repair);
    if (!check(*r.repaired, ctx.field, ctx.mu).verified()) {
      throw VerificationError(e.printed.name + ": repaired form does not verify");
    }
  }
  return r;
}

}  // namespace

const std::vector<CatalogEntry>& order5_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::string_view to_string(GeneratorChoice g) {
  return g == GeneratorChoice::Induced ? "induced" : "printed";
}

std::optional<GeneratorChoice> generator_from_string(std::string_view s) {
  if (s == "induced") return GeneratorChoice::Induced;
  if (s == "printed") return GeneratorChoice::Printed;
  return std::nullopt;
}

GeneratorContext order5_context(GeneratorChoice g) {
  VectorField v = g == GeneratorChoice::Induced ? induced_generator_order5() : builtin_generator_order5();
  return make_context(std::move(v), parse("a3"));
}

std::string_view to_string(RepairRoute r) { return kRouteNames[static_cast<std::size_t>(r)]; }

bool CatalogReport::all_verified() const {
  for (const auto& e : entries) {
    if (!e.verdict.verified()) return false;
  }
  return true;
}

namespace {

Invariant usable(const EntryReport& e) {
  if (e.verdict.verified()) return e.entry->printed;
  if (e.repaired) return *e.repaired;
  throw VerificationError(e.entry->printed.name + " is rejected and has no unique repair");
}

const EntryReport& find_entry(const std::vector<EntryReport>& entries, const std::string& name) {
  for (const auto& e : entries) {
    if (e.entry->printed.name == name) return e;
  }
  throw std::invalid_argument("no catalog entry named " + name);
}

}  // namespace

Seeds CatalogReport::seeds() const {
  return {usable(find_entry(entries, "S0")), usable(find_entry(entries, "R0")),
          usable(find_entry(entries, "S1")), usable(find_entry(entries, "S2")),
          usable(find_entry(entries, "S3"))};
}

Invariant CatalogReport::absolute(const std::string& name) const {
  return usable(find_entry(entries, name));
}

CatalogReport check_catalog(GeneratorChoice g, Exec exec) {
  const GeneratorContext ctx = order5_context(g);
  CatalogReport report{g, {}};
  for (const auto& e : order5_catalog()) report.entries.push_back(examine(e, ctx, exec));
  return report;
}

Seeds verified_seeds(GeneratorChoice g, Exec exec) {
  const GeneratorContext ctx = order5_context(g);
  CatalogReport report{g, {}};
  for (const auto& e : order5_catalog()) {
    if (e.printed.kind == InvariantKind::Relative) report.entries.push_back(examine(e, ctx, exec));
  }
  return report.seeds();
}

}  // namespace difinv
