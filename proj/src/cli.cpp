#include "difinv/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "difinv/ansatz.hpp"
#include "difinv/catalog.hpp"
#include "difinv/counting.hpp"
#include "difinv/errors.hpp"
#include "difinv/format.hpp"
#include "difinv/json_io.hpp"
#include "difinv/syntax.hpp"
#include "difinv/transform.hpp"

namespace difinv::cli {

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  Format format = Format::Text;
  std::uint64_t seed = 0;
  int max_jet_order = 12;
  GeneratorChoice generator = GeneratorChoice::Induced;
};

struct Io {
  std::ostream& out;
  const Options& opt;
};

constexpr std::size_t kShortResidual = 12;

std::string brief(const DiffPoly& p) {
  if (p.size() <= kShortResidual) return to_text(p);
  return "<" + std::to_string(p.size()) + " terms, leading " +
         to_text(DiffPoly::from_terms({p.leading()})) + ">";
}

std::string index_text(const Rational& q) { return q.get_str(); }

std::string weight_text(const std::optional<int>& w) { return w ? std::to_string(*w) : "n/a"; }

// "chi_1(S1,S0)" -> "\chi_{1}(S_{1},S_{0})"
std::string latex_name(const std::string& name) {
  static const std::regex sub("([A-Za-z]+)_?([0-9]+)");
  std::string out = std::regex_replace(name, sub, "$1_{$2}");
  out = std::regex_replace(out, std::regex("\\bchi_"), "\\chi_");
  out = std::regex_replace(out, std::regex("\\bphi_"), "\\varphi_");
  out = std::regex_replace(out, std::regex("\\bphi\\("), "\\varphi(");
  out = std::regex_replace(out, std::regex("\\bchi\\("), "\\chi(");
  return out;
}

Json verdict_json(const Verdict& v) {
  return Json{{"verdict", v.verified() ? "verified" : "rejected"},
              {"residual", v.verified() ? Json(nullptr) : to_json(v.residual)}};
}

void emit(const Io& io, const Json& j) { io.out << j.dump(2) << "\n"; }

void merge(Json& into, const Json& fields) {
  for (const auto& [k, v] : fields.items()) into[k] = v;
}

const CatalogEntry* catalog_entry(const std::string& name) {
  for (const auto& e : order5_catalog()) {
    if (e.printed.name == name) return &e;
  }
  return nullptr;
}

Invariant seed_by_name(const Seeds& s, const std::string& name) {
  if (name == "S0") return s.s0;
  if (name == "R0") return s.r0;
  if (name == "S1") return s.s1;
  if (name == "S2") return s.s2;
  if (name == "S3") return s.s3;
  throw CLI::ValidationError("--seed", "expected one of S0, R0, S1, S2, S3");
}

// ---- catalog ---------------------------------------------------------------

int cmd_catalog(const Io& io) {
  const CatalogReport report = check_catalog(io.opt.generator);
  const GeneratorChoice other_choice =
      io.opt.generator == GeneratorChoice::Induced ? GeneratorChoice::Printed : GeneratorChoice::Induced;
  const GeneratorContext other = order5_context(other_choice);
  const VectorField induced = induced_generator_order5();
  const VectorField printed = builtin_generator_order5();

  std::size_t verified = 0, repaired = 0;
  for (const auto& e : report.entries) {
    if (e.verdict.verified()) ++verified;
    if (e.repaired) ++repaired;
  }
  const std::size_t rejected = report.entries.size() - verified;

  if (io.opt.format == Format::Json) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      const Invariant& inv = e.entry->printed;
      Json j{{"name", inv.name}, {"printed", e.entry->printed_text}, {"record", to_json(inv)}};
      merge(j, verdict_json(e.verdict));
      j["isobaric"] = e.isobaric;
      j["inferred_index"] = e.inferred_index ? to_json(*e.inferred_index) : Json(nullptr);
      if (e.verdict.verified()) {
        j["repair"] = nullptr;
      } else {
        Json basis = Json::array();
        for (const auto& b : e.space_basis) basis.push_back(to_json(b));
        j["repair"] = Json{{"route", std::string(to_string(e.route))},
                           {"record", e.repaired ? to_json(*e.repaired) : Json(nullptr)},
                           {"scale", e.scale ? to_json(*e.scale) : Json(nullptr)},
                           {"space_dimension", e.space_dimension ? Json(*e.space_dimension) : Json(nullptr)},
                           {"space_basis", basis}};
      }
      j["other_generator"] = Json{{"generator", std::string(to_string(other_choice))},
                                  {"verdict", check(inv, other.field, other.mu).verified() ? "verified"
                                                                                           : "rejected"}};
      entries.push_back(std::move(j));
    }
    Json comparison = Json::array();
    for (int j : printed.slots()) {
      comparison.push_back(Json{{"slot", j},
                                {"printed", to_json(printed.phis.at(j))},
                                {"induced", to_json(induced.phis.at(j))},
                                {"agree", printed.phis.at(j) == induced.phis.at(j)}});
    }
    emit(io, Json{{"command", "catalog"},
                  {"generator", std::string(to_string(io.opt.generator))},
                  {"entries", std::move(entries)},
                  {"generator_comparison", std::move(comparison)},
                  {"summary", Json{{"entries", report.entries.size()},
                                   {"verified", verified},
                                   {"rejected", rejected},
                                   {"repaired", repaired}}}});
  } else if (io.opt.format == Format::Latex) {
    io.out << "\\begin{align*}\n";
    for (const auto& e : report.entries) {
      const Invariant& inv = e.entry->printed;
      io.out << latex_name(inv.name) << " &= " << to_latex(inv.expr) << " && \\text{"
             << (e.verdict.verified() ? "verified" : "rejected") << "}\\\\\n";
      if (e.repaired) {
        io.out << latex_name(inv.name) << "^{*} &= " << to_latex(e.repaired->expr)
               << " && \\text{repaired (" << to_string(e.route) << ")}\\\\\n";
      }
    }
    io.out << "\\end{align*}\n";
  } else {
    io.out << "generator: " << to_string(io.opt.generator) << "\n";
    for (const auto& e : report.entries) {
      const Invariant& inv = e.entry->printed;
      io.out << inv.name << "  " << (e.verdict.verified() ? "verified" : "rejected") << "  ";
      if (inv.kind == InvariantKind::Relative) io.out << "index " << index_text(inv.index) << "  ";
      io.out << "weight " << weight_text(inv.weight) << "  order " << inv.order << "  "
             << to_string(other_choice) << "-generator: "
             << (check(inv, other.field, other.mu).verified() ? "verified" : "rejected") << "\n";
      io.out << "    printed: " << e.entry->printed_text << "\n";
      if (e.verdict.verified()) continue;
      io.out << "    residual: " << brief(e.verdict.residual) << "\n";
      if (!e.isobaric) io.out << "    not isobaric of the stated weight " << e.entry->weight << "\n";
      io.out << "    repair: " << to_string(e.route);
      if (e.space_dimension) io.out << " (ansatz space dimension " << *e.space_dimension << ")";
      io.out << "\n";
      if (e.repaired) io.out << "    repaired: " << to_text(e.repaired->expr) << "\n";
      if (e.scale) io.out << "    repaired = " << e.scale->get_str() << " * printed\n";
    }
    io.out << "generator comparison (printed vs induced):\n";
    for (int j : printed.slots()) {
      const DiffPoly& p = printed.phis.at(j);
      const DiffPoly& q = induced.phis.at(j);
      io.out << "  phi" << j << ": " << (p == q ? "agree" : "differ") << "  printed " << to_text(p);
      if (p != q) io.out << "  induced " << to_text(q);
      io.out << "\n";
    }
    io.out << "summary: " << verified << " verified, " << rejected << " rejected, " << repaired
           << " repaired of " << report.entries.size() << "\n";
  }
  return rejected == 0 ? kExitOk : kExitResidual;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Io& io, const std::string& text, const std::optional<std::string>& index_arg) {
  const GeneratorContext ctx = order5_context(io.opt.generator);
  Invariant inv;
  bool inferred = false;
  bool not_relative = false;
  if (const CatalogEntry* e = catalog_entry(text)) {
    inv = e->printed;
  } else {
    RatFunc r = parse_rational(text);
    if (!r.is_polynomial()) {
      if (index_arg && rational_from_string(*index_arg) != 0) {
        throw CLI::ValidationError("--index", "rational functions are checked as absolute invariants");
      }
      inv = make_absolute("F", r, Provenance::Printed);
    } else {
      DiffPoly p = r.num() * (Rational(1) / *r.den().as_constant());
      Rational m = 0;
      if (index_arg) {
        m = rational_from_string(*index_arg);
      } else if (!p.is_zero()) {
        auto found = infer_index(p, ctx.field, ctx.mu);
        not_relative = !found;
        inferred = found.has_value();
        m = found.value_or(0);
      }
      inv = make_relative("F", std::move(p), m, Provenance::Printed);
    }
  }
  const Verdict v = not_relative ? Verdict{} : check(inv, ctx.field, ctx.mu);
  const bool ok = !not_relative && v.verified();
  const std::string verdict = not_relative ? "not a relative invariant" : ok ? "verified" : "rejected";

  if (io.opt.format == Format::Json) {
    Json j{{"command", "verify"}, {"input", text}, {"generator", std::string(to_string(io.opt.generator))},
           {"record", to_json(inv)}, {"verdict", verdict},
           {"residual", ok || not_relative ? Json(nullptr) : to_json(v.residual)}};
    emit(io, j);
  } else if (io.opt.format == Format::Latex) {
    io.out << to_latex(inv.expr) << " \\quad \\text{" << verdict << "}\n";
  } else {
    io.out << "expression: " << to_text(inv.expr) << "\n";
    io.out << "kind: " << to_string(inv.kind) << "\n";
    if (inv.kind == InvariantKind::Relative && !not_relative) {
      io.out << "index: " << index_text(inv.index) << (inferred ? " (inferred)" : "") << "\n";
    }
    io.out << "weight: " << weight_text(inv.weight) << "\n";
    io.out << "verdict: " << verdict << "\n";
    if (!ok && !not_relative) io.out << "residual: " << to_text(v.residual) << "\n";
  }
  return ok ? kExitOk : kExitResidual;
}

// ---- find ------------------------------------------------------------------

int cmd_find(const Io& io, int w, int r) {
  const GeneratorContext ctx = order5_context(io.opt.generator);
  AnsatzResult res = find_relative_invariants(w, r, ctx.field, ctx.mu);
  std::vector<Invariant> basis;
  for (std::size_t i = 0; i < res.basis.size(); ++i) {
    basis.push_back(make_relative("F" + std::to_string(i + 1), res.basis[i], w, Provenance::Ansatz));
  }
  if (io.opt.format == Format::Json) {
    Json b = Json::array();
    for (const auto& inv : basis) b.push_back(to_json(inv));
    emit(io, Json{{"command", "find"}, {"weight", w}, {"max_order", r},
                  {"candidates", res.candidates.size()}, {"equations", res.equations},
                  {"rank", res.rank}, {"dimension", basis.size()}, {"basis", std::move(b)}});
  } else if (io.opt.format == Format::Latex) {
    for (const auto& inv : basis) io.out << latex_name(inv.name) << " = " << to_latex(inv.expr) << "\n";
  } else {
    io.out << "weight " << w << ", order <= " << r << ": " << res.candidates.size() << " candidates, "
           << res.equations << " equations, rank " << res.rank << ", dimension " << basis.size() << "\n";
    for (const auto& inv : basis) io.out << "  " << inv.name << " = " << to_text(inv.expr) << "\n";
  }
  return kExitOk;
}

// ---- generate --------------------------------------------------------------

void list_records(const Io& io, const std::string& command, const std::vector<Invariant>& invs,
                  const GeneratorContext& ctx, bool& all_ok, Json extra = Json::object()) {
  std::vector<Verdict> verdicts;
  for (const auto& inv : invs) {
    verdicts.push_back(check(inv, ctx.field, ctx.mu));
    all_ok = all_ok && verdicts.back().verified();
  }
  if (io.opt.format == Format::Json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < invs.size(); ++i) {
      Json j = to_json(invs[i]);
      merge(j, verdict_json(verdicts[i]));
      list.push_back(std::move(j));
    }
    Json j{{"command", command}};
    merge(j, extra);
    j["invariants"] = std::move(list);
    emit(io, j);
  } else if (io.opt.format == Format::Latex) {
    for (const auto& inv : invs) io.out << latex_name(inv.name) << " = " << to_latex(inv.expr) << "\n";
  } else {
    for (std::size_t i = 0; i < invs.size(); ++i) {
      const Invariant& inv = invs[i];
      io.out << inv.name << "  " << to_string(inv.kind) << "  index " << index_text(inv.index)
             << "  weight " << weight_text(inv.weight) << "  order " << inv.order << "  "
             << (verdicts[i].verified() ? "verified" : "rejected") << "\n";
      io.out << "    " << to_text(inv.expr) << "\n";
    }
  }
}


int cmd_generate(const Io& io, const std::string& seed_name, int steps, const std::string& base_name) {
  if (steps < 1) throw CLI::ValidationError("--steps", "must be at least 1");
  const GeneratorContext ctx = order5_context(io.opt.generator);
  const Seeds seeds = verified_seeds(io.opt.generator);
  const Invariant s = seed_by_name(seeds, seed_name);
  const Invariant base = seed_by_name(seeds, base_name);
  std::vector<Invariant> out = phi_seq(s, steps, base);
  for (auto& c : chi_seq(s, steps, base)) out.push_back(std::move(c));
  bool ok = true;
  list_records(io, "generate", out, ctx, ok,
               Json{{"seed", seed_name}, {"base", base_name}, {"steps", steps}});
  return ok ? kExitOk : kExitResidual;
}

// ---- fundamental -----------------------------------------------------------

int cmd_fundamental(const Io& io, int p, std::size_t trials) {
  if (p < 1) throw CLI::ValidationError("--order", "must be at least 1");
  const GeneratorContext ctx = order5_context(io.opt.generator);
  const std::vector<Invariant> set = fundamental_set(p, verified_seeds(io.opt.generator), ctx);
  PointSampler sampler;
  sampler.seed = io.opt.seed;
  const RankReport rank = jacobian_rank(set, trials, sampler);
  const bool independent = rank.rank == set.size();
  if (io.opt.format == Format::Latex) {
    for (const auto& inv : set) io.out << latex_name(inv.name) << " = " << to_latex(inv.expr) << "\n";
  } else {
    bool ok = true;
    list_records(io, "fundamental", set, ctx, ok,
                 Json{{"order", p},
                      {"count", set.size()},
                      {"jacobian_rank", rank.rank},
                      {"points", rank.points},
                      {"seed", io.opt.seed}});
    if (io.opt.format == Format::Text) {
      io.out << set.size() << " invariants; jacobian rank " << rank.rank << " at " << rank.points
             << " seeded points (" << (independent ? "functionally independent" : "dependent") << ")\n";
    }
  }
  return independent ? kExitOk : kExitResidual;
}

// ---- count -----------------------------------------------------------------

int cmd_count(const Io& io, int p, std::size_t trials) {
  const GeneratorContext ctx = order5_context(io.opt.generator);
  PointSampler sampler;
  sampler.seed = io.opt.seed;
  const CountReport c = invariant_count(ctx.field, p, trials, sampler);
  if (io.opt.format == Format::Json) {
    emit(io, Json{{"command", "count"}, {"order", p}, {"count", c.count},
                  {"jet_variables", c.jet_variables}, {"rank", c.rank.rank},
                  {"points", c.rank.points}, {"formula", c.formula},
                  {"formula_agrees", c.formula_agrees}, {"seed", io.opt.seed}});
  } else if (io.opt.format == Format::Latex) {
    io.out << "\\Gamma_{\\mathrm{rank}}(" << p << ") = " << c.count << ", \\quad n+4-p(n-2) = "
           << c.formula << "\n";
  } else {
    io.out << c.count << "\n";
    io.out << "order " << p << ": " << c.jet_variables << " jet variables, generic orbit rank "
           << c.rank.rank << ", " << c.count << " absolute invariants\n";
    io.out << "formula n+4-p(n-2) = " << c.formula << ": "
           << (c.formula_agrees ? "agrees" : "inconsistent with the rank count") << "\n";
  }
  return kExitOk;
}

// ---- transform-check -------------------------------------------------------

int cmd_transform_check(const Io& io, const std::optional<std::string>& name) {
  const GeneratorContext ctx = order5_context(io.opt.generator);
  const Seeds seeds = verified_seeds(io.opt.generator);
  std::vector<Invariant> targets;
  if (name) {
    targets.push_back(seed_by_name(seeds, *name));
  } else {
    targets = {seeds.s0, seeds.r0, seeds.s1, seeds.s2, seeds.s3};
  }
  std::vector<LawReport> reports;
  bool ok = true;
  for (const auto& t : targets) {
    reports.push_back(verify_transformation_law(t, ctx));
    ok = ok && reports.back().derivative_law && reports.back().a1_vanishes && reports.back().a2_vanishes;
  }
  const bool value_never = std::none_of(reports.begin(), reports.end(),
                                        [](const LawReport& r) { return r.value_law; });
  const std::string finding = ok && value_never
                                  ? "the factor is (dxi/dz)^m; the base xi^m fails"
                                  : "the factor (dxi/dz)^m does not hold for every invariant";
  if (io.opt.format == Format::Json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const LawReport& r = reports[i];
      list.push_back(Json{{"name", targets[i].name},
                          {"index", to_json(r.index)},
                          {"a1_vanishes", r.a1_vanishes},
                          {"a2_vanishes", r.a2_vanishes},
                          {"derivative_factor", r.derivative_law},
                          {"value_factor", r.value_law}});
    }
    emit(io, Json{{"command", "transform-check"}, {"family", "mobius"},
                  {"results", std::move(list)}, {"finding", finding}});
  } else {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const LawReport& r = reports[i];
      io.out << targets[i].name << "  index " << index_text(r.index) << "  A1 "
             << (r.a1_vanishes ? "= 0" : "!= 0") << "  A2 " << (r.a2_vanishes ? "= 0" : "!= 0")
             << "  (dxi/dz)^m: " << (r.derivative_law ? "holds" : "fails")
             << "  xi^m: " << (r.value_law ? "holds" : "fails") << "\n";
    }
    io.out << "finding: " << finding << "\n";
  }
  return ok ? kExitOk : kExitResidual;
}

// ---- inv-derive ------------------------------------------------------------

int cmd_inv_derive(const Io& io, const std::string& of, const std::string& wrt) {
  const GeneratorContext ctx = order5_context(io.opt.generator);
  const CatalogReport cat = check_catalog(io.opt.generator);
  auto absolute = [&](const std::string& n) {
    const CatalogEntry* e = catalog_entry(n);
    if (e == nullptr || e->printed.kind != InvariantKind::Absolute) {
      throw CLI::ValidationError("inv-derive", n + " is not an absolute catalog entry");
    }
    return cat.absolute(n);
  };
  const Invariant i = absolute(of);
  const Invariant i0 = absolute(wrt);
  const Invariant d = invariant_derivative(i, i0, ctx);

  // closed form when I = S^e/S0^d and I0 = R0^e0/S0^d0 for catalog seeds
  const Seeds seeds = cat.seeds();
  std::optional<ClosedForm> closed;
  const auto& base = std::get<PowerProduct>(i.expr).factors.front().base;
  const auto& base0 = std::get<PowerProduct>(i0.expr).factors.front().base;
  if (base0 == std::get<DiffPoly>(seeds.r0.expr)) {
    for (const Invariant* s : {&seeds.s1, &seeds.s2, &seeds.s3}) {
      if (base == std::get<DiffPoly>(s->expr)) {
        closed = derivative_closed_form(i, *s, i0, seeds.r0, seeds.s0);
      }
    }
  }
  if (io.opt.format == Format::Json) {
    Json j{{"command", "inv-derive"}, {"of", of}, {"wrt", wrt}, {"record", to_json(d)},
           {"verdict", "verified"}};
    j["closed_form"] = closed ? Json{{"factor", to_json(closed->factor)}, {"holds", closed->holds}}
                              : Json(nullptr);
    emit(io, j);
  } else if (io.opt.format == Format::Latex) {
    io.out << "\\frac{D_x " << latex_name(of) << "}{D_x " << latex_name(wrt) << "} = " << to_latex(d.expr)
           << "\n";
  } else {
    io.out << d.name << " = " << to_text(d.expr) << "\n";
    io.out << "absolute invariant of order " << d.order << ": verified\n";
    if (closed) {
      io.out << "closed form (e/e0)(I/I0)(R0/S)(m S S0' - sigma S0 S')/(k R0 S0' - sigma S0 R0') with e/e0 = "
             << closed->factor.get_str() << ": " << (closed->holds ? "confirmed" : "refuted") << "\n";
    }
  }
  return closed && !closed->holds ? kExitResidual : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact differential invariants of linear ODEs in the order-5 canonical form"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "text", generator = "induced";
  app.add_option("--format", format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", opt.seed, "seed for random sample points");
  app.add_option("--max-jet-order", opt.max_jet_order, "largest derivative order allowed")
      ->check(CLI::Range(1, 255));
  app.add_option("--generator", generator, "induced (from the finite action) or printed")
      ->check(CLI::IsMember({"induced", "printed"}));

  std::function<int(const Io&)> action;

  auto* catalog = app.add_subcommand("catalog", "check every printed entry and repair rejected ones");
  catalog->callback([&] { action = cmd_catalog; });

  auto* verify = app.add_subcommand("verify", "check an expression or catalog entry");
  std::string expr;
  std::optional<std::string> index;
  verify->add_option("expr", expr, "expression or catalog name")->required();
  verify->add_option("--index", index, "index m of a relative invariant");
  verify->callback([&] { action = [&](const Io& io) { return cmd_verify(io, expr, index); }; });

  auto* find = app.add_subcommand("find", "relative invariants of a given weight by ansatz");
  int weight = 0, max_order = 0;
  find->add_option("--weight", weight)->required()->check(CLI::Range(0, kMaxAnsatzWeight));
  find->add_option("--max-order", max_order)->required()->check(CLI::NonNegativeNumber);
  find->callback([&] { action = [&](const Io& io) { return cmd_find(io, weight, max_order); }; });

  auto* generate = app.add_subcommand("generate", "Halphen sequence phi_q, chi_q of a seed");
  std::string seed_name, base_name = "S0";
  int steps = 1;
  generate->add_option("--seed", seed_name, "S0, R0, S1, S2 or S3")->required();
  generate->add_option("--steps", steps)->required();
  generate->add_option("--base", base_name, "fixed second argument (default S0)");
  generate->callback([&] {
    action = [&](const Io& io) { return cmd_generate(io, seed_name, steps, base_name); };
  });

  auto* fundamental = app.add_subcommand("fundamental", "fundamental set of absolute invariants");
  int order = 1;
  std::size_t trials = 20;
  fundamental->add_option("--order", order)->required();
  fundamental->add_option("--trials", trials, "random points for the rank");
  fundamental->callback([&] { action = [&](const Io& io) { return cmd_fundamental(io, order, trials); }; });

  auto* count = app.add_subcommand("count", "number of absolute invariants of a prolongation");
  int count_order = 1;
  std::size_t count_trials = 20;
  count->add_option("--order", count_order)->required()->check(CLI::NonNegativeNumber);
  count->add_option("--trials", count_trials, "random points for the rank");
  count->callback([&] {
    action = [&](const Io& io) { return cmd_count(io, count_order, count_trials); };
  });

  auto* transform = app.add_subcommand("transform-check", "transformation law over Mobius maps");
  std::optional<std::string> invariant;
  transform->add_option("--invariant", invariant, "S0, R0, S1, S2 or S3 (default all)");
  transform->callback([&] { action = [&](const Io& io) { return cmd_transform_check(io, invariant); }; });

  auto* derive = app.add_subcommand("inv-derive", "invariant differentiation D(I)/D(I0)");
  std::string of, wrt;
  derive->add_option("--of", of)->required();
  derive->add_option("--wrt", wrt)->required();
  derive->callback([&] { action = [&](const Io& io) { return cmd_inv_derive(io, of, wrt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  opt.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  opt.generator = *generator_from_string(generator);
  JetOrderLimitGuard guard(opt.max_jet_order);
  Io io{out, opt};
  try {
    return action(io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitResidual;
  } catch (const SamplingError& e) {
    err << "sampling failed: " << e.what() << "\n";
    return kExitResidual;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // DomainError and friends: the request does not make sense for its input
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace difinv::cli
