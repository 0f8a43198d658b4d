// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "difinv/catalog.hpp"
#include "difinv/cli.hpp"
#include "difinv/counting.hpp"
#include "difinv/errors.hpp"
#include "difinv/halphen.hpp"
#include "difinv/json_io.hpp"
#include "difinv/syntax.hpp"
#include "difinv/transform.hpp"
#include "support/random_poly.hpp"

using namespace difinv;
using difinv::testing::PolyGen;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

const DiffPoly& poly(const Invariant& inv) { return std::get<DiffPoly>(inv.expr); }

int cli_code(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "difinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

Result algebra_laws() {
  Result r;
  PolyGen gx(101, testing::x_pool()), gz(102, testing::z_pool()), gw(103, testing::coef_pool());
  int cases = 0;
  for (int i = 0; i < 250; ++i, ++cases) {
    DiffPoly p = gx.poly(), q = gx.poly(), s = gx.poly();
    bool ok = p + q == q + p && p * q == q * p && (p + q) + s == p + (q + s) &&
              (p * q) * s == p * (q * s) && p * (q + s) == p * q + p * s && p - p == DiffPoly();
    RatFunc f(p, gx.nonzero_poly(3)), g(q, gx.nonzero_poly(3));
    ok = ok && f + g == g + f && f * g == g * f;
    if (!g.is_zero()) ok = ok && (f / g) * g == f;
    r.expect(ok, "ring/field axioms, case " + std::to_string(i));
  }
  for (int i = 0; i < 250; ++i, ++cases) {
    DiffPoly p = gx.poly(), q = gx.poly();
    r.expect(total_derivative(p * q, Derivation::X) ==
                 total_derivative(p, Derivation::X) * q + p * total_derivative(q, Derivation::X),
             "Leibniz D_x, case " + std::to_string(i));
  }
  for (int i = 0; i < 250; ++i, ++cases) {
    DiffPoly p = gz.poly(), q = gz.poly();
    r.expect(total_derivative(p * q, Derivation::Z) ==
                 total_derivative(p, Derivation::Z) * q + p * total_derivative(q, Derivation::Z),
             "Leibniz D_z, case " + std::to_string(i));
  }
  int graded = 0;
  for (int i = 0; i < 250; ++i, ++cases) {
    DiffPoly p = gw.isobaric(6 + i % 5, {3, 4, 5}, 2);
    DiffPoly q = gw.isobaric(3 + i % 7, {3, 4, 5}, 2);
    if (p.is_zero() || q.is_zero()) continue;
    Weight wp = weight(p), wq = weight(q);
    bool ok = wp.isobaric() && wq.isobaric() && weight(p * q).value == wp.value + wq.value;
    DiffPoly dp = total_derivative(p, Derivation::X);
    if (!dp.is_zero()) ok = ok && weight(dp).isobaric() && weight(dp).value == wp.value + 1;
    r.expect(ok, "grading, case " + std::to_string(i));
    ++graded;
  }
  r.expect(graded > 200, "enough isobaric samples");
  r.note(std::to_string(cases) + " cases");
  return r;
}

Result fundamental_invariant() {
  Result r;
  r.expect(cli_code({"--generator", "printed", "verify", "a3", "--index", "3"}) == cli::kExitOk,
           "verify a3 --index 3 under the printed generator");
  GeneratorContext printed = order5_context(GeneratorChoice::Printed);
  GeneratorContext induced = order5_context(GeneratorChoice::Induced);
  r.expect(printed.mu == parse("k2 + 2*k3*x"), "mu (printed)");
  r.expect(induced.mu == parse("k2 + 2*k3*x"), "mu (induced)");
  r.note("mu = " + to_text(printed.mu));
  return r;
}

Result catalog_report() {
  Result r;
  for (GeneratorChoice g : {GeneratorChoice::Induced, GeneratorChoice::Printed}) {
    CatalogReport a = check_catalog(g), b = check_catalog(g);
    GeneratorContext ctx = order5_context(g);
    r.expect(a.entries.size() == 15, "15 entries");
    int rejected = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      const EntryReport& e = a.entries[i];
      const std::string name = e.entry->printed.name;
      r.expect(e.verdict.verified() == b.entries[i].verdict.verified(), "deterministic " + name);
      r.expect(to_json(e.entry->printed) == to_json(order5_catalog()[i].printed),
               "printed entry unaltered " + name);
      if (e.verdict.verified()) continue;
      ++rejected;
      if (e.route == RepairRoute::Trivial) {
        r.expect(e.space_dimension == std::size_t{0}, "trivial space for " + name);
        continue;
      }
      r.expect(e.repaired.has_value(), "repair for " + name);
      if (e.repaired) {
        r.expect(e.repaired->provenance == Provenance::Repaired, "repair provenance " + name);
        r.expect(check(*e.repaired, ctx.field, ctx.mu).verified(), "repair verifies " + name);
      }
    }
    r.note(std::string(to_string(g)) + ": " + std::to_string(rejected) + " rejected");
    if (g == GeneratorChoice::Induced) {
      r.expect(rejected == 1 && !a.entries.back().verdict.verified(),
               "only the literal I9 is rejected under the induced generator");
    }
  }
  return r;
}

Result cross_route() {
  Result r;
  VectorField sum;
  sum.n = 5;
  const std::pair<const char*, const char*> parts[] = {{"1", "k1"}, {"x", "k2"}, {"x^2", "k3"}};
  for (const auto& [basis, param] : parts) {
    VectorField v = induced_generator(parse(basis));
    DiffPoly k = parse(param);
    sum.f += k * v.f;
    for (const auto& [j, phi] : v.phis) sum.phis[j] += k * phi;
  }
  VectorField full = induced_generator_order5();
  bool same = sum.f == full.f;
  for (const auto& [j, phi] : full.phis) same = same && sum.phis[j] == phi;
  r.expect(same, "basis generators combine to the full induced generator");

  GeneratorContext ctx = make_context(sum, parse("a3"));
  r.expect(check_relative(parse("a3"), 3, ctx.field, ctx.mu).verified(), "S0 index 3");
  CatalogReport cat = check_catalog(GeneratorChoice::Induced);
  for (const auto& e : cat.entries) {
    const Invariant& inv = e.repaired ? *e.repaired : e.entry->printed;
    r.expect(check(inv, ctx.field, ctx.mu).verified(), inv.name + " under the combined generator");
    if (inv.kind == InvariantKind::Relative) {
      r.expect(inv.index == e.entry->weight, inv.name + " stated index");
    }
  }
  VectorField printed = builtin_generator_order5();
  std::string diffs;
  for (const auto& [j, phi] : printed.phis) {
    if (phi != sum.phis[j]) {
      diffs += (diffs.empty() ? "" : ", ") + std::string("phi") + std::to_string(j) +
               ": induced - printed = " + to_text(sum.phis[j] - phi);
    }
  }
  r.note("discrepancies with the printed generator: " + (diffs.empty() ? "none" : diffs));
  return r;
}

Result sequences() {
  Result r;
  GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  Seeds s = verified_seeds(GeneratorChoice::Induced);
  for (const Invariant* seed : {&s.s1, &s.s2, &s.s3, &s.r0}) {
    auto phis = phi_seq(*seed, 3, s.s0);
    auto chis = chi_seq(*seed, 3, s.s0);
    for (int q = 1; q <= 3; ++q) {
      const Invariant& p = phis[static_cast<std::size_t>(q - 1)];
      const Invariant& c = chis[static_cast<std::size_t>(q - 1)];
      std::string tag = seed->name + " q=" + std::to_string(q);
      r.expect(p.index == theta(seed->index, 3, q), "theta " + tag);
      r.expect(p.order == seed->order + q, "order " + tag);
      r.expect(check(p, ctx.field, ctx.mu).verified(), "phi verifies " + tag);
      r.expect(c.kind == InvariantKind::Absolute && check(c, ctx.field, ctx.mu).verified(),
               "chi absolute " + tag);
    }
  }
  return r;
}

Result counting() {
  Result r;
  GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  std::string counts, formula;
  for (int p = 1; p <= 3; ++p) {
    CountReport c = invariant_count(ctx.field, p, 20);
    r.expect(c.count == 3 * p + 1, "count at p=" + std::to_string(p));
    r.expect(!c.formula_agrees, "printed formula flagged at p=" + std::to_string(p));
    counts += (p > 1 ? "," : "") + std::to_string(c.count);
    formula += (p > 1 ? "," : "") + std::to_string(c.formula);
  }
  r.note("counts " + counts + "; printed formula " + formula + " flagged inconsistent");
  return r;
}

Result independence() {
  Result r;
  GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  Seeds s = verified_seeds(GeneratorChoice::Induced);
  auto set = fundamental_set(1, s, ctx);
  r.expect(set.size() == 4, "quadruple");
  RankReport rank = jacobian_rank(set, 100);
  r.expect(rank.rank == 4, "rank 4");
  r.note("rank " + std::to_string(rank.rank) + " over 100 points (" +
         std::to_string(rank.points) + " nonsingular, " + std::to_string(rank.at_max) +
         " at the maximum)");
  return r;
}

Result transformation_law() {
  Result r;
  GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  Seeds s = verified_seeds(GeneratorChoice::Induced);
  std::vector<Invariant> rel{s.s0, s.r0, s.s1, s.s2, s.s3, phi(s.s1, s.s0)};
  int value_holds = 0;
  for (const auto& inv : rel) {
    LawReport law = verify_transformation_law(inv, ctx, Family::Mobius);
    r.expect(law.a1_vanishes && law.a2_vanishes, "A1 = A2 = 0 for " + inv.name);
    r.expect(law.derivative_law, "(dxi/dz)^m for " + inv.name);
    value_holds += law.value_law;
  }
  r.expect(value_holds == 0, "xi^m never holds");
  r.note("finding: the factor is (dxi/dz)^m; the base xi^m fails");
  return r;
}

Result differentiation() {
  Result r;
  GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  CatalogReport cat = check_catalog(GeneratorChoice::Induced);
  Seeds s = cat.seeds();
  Invariant i0 = cat.absolute("I0");
  const std::pair<const char*, const Invariant*> pairs[] = {
      {"I1", &s.s1}, {"I2", &s.s2}, {"I3", &s.s3}};
  for (const auto& [name, seed] : pairs) {
    Invariant i = cat.absolute(name);
    try {
      Invariant d = invariant_derivative(i, i0, ctx);
      r.expect(check(d, ctx.field, ctx.mu).verified(), std::string("D") + name + "/DI0 absolute");
    } catch (const VerificationError& e) {
      r.expect(false, std::string(name) + ": " + e.what());
    }
    ClosedForm cf = derivative_closed_form(i, *seed, i0, s.r0, s.s0);
    std::ostringstream f;
    f << name << " closed form " << (cf.holds ? "confirmed" : "refuted") << " (e/e0 = "
      << cf.factor << ")";
    r.note(f.str());
    r.expect(cf.holds, std::string(name) + " closed form");
  }
  return r;
}

Result interface() {
  Result r;
  CatalogReport cat = check_catalog(GeneratorChoice::Printed);
  for (const auto& e : cat.entries) {
    for (const Invariant* inv : {&e.entry->printed, e.repaired ? &*e.repaired : nullptr}) {
      if (!inv) continue;
      std::string once = to_json(*inv).dump();
      r.expect(to_json(invariant_from_json(Json::parse(once))).dump() == once,
               "json round trip " + inv->name);
    }
  }
  std::string a, b;
  cli_code({"--format", "json", "catalog"}, &a);
  cli_code({"--format", "json", "catalog"}, &b);
  r.expect(a == b && Json::parse(a).dump(2) + "\n" == a, "catalog json byte-stable");

  r.expect(cli_code({"verify", "a3", "--index", "3"}) == cli::kExitOk, "exit 0");
  r.expect(cli_code({"verify", "a3", "--index", "2"}) == cli::kExitResidual, "exit 1");
  r.expect(cli_code({"verify", "a3 +* a4"}) == cli::kExitUsage, "exit 2 (parse)");
  r.expect(cli_code({"--format", "yaml", "verify", "a3"}) == cli::kExitUsage, "exit 2 (flag)");
  r.expect(cli_code({"--max-jet-order", "2", "verify", "I7"}) == cli::kExitLimit, "exit 3");

  std::vector<JetVar> pool = testing::x_pool();
  pool.push_back(JetVar::coef(6, 4));
  pool.push_back(JetVar::param(Param::K3));
  pool.push_back(JetVar::xi(3));
  pool.push_back(JetVar::comp_coef(5, 1));
  PolyGen gen(210, pool);
  for (int i = 0; i < 500; ++i) {
    DiffPoly p = gen.poly(6);
    r.expect(parse(to_text(p)) == p, "parse(print(p)) == p, case " + std::to_string(i));
  }
  r.note("500 parse/print cases, 5 exit-code scenarios");
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"algebra laws", algebra_laws},
      {"fundamental invariant", fundamental_invariant},
      {"catalog report", catalog_report},
      {"cross-route consistency", cross_route},
      {"sequence machinery", sequences},
      {"counting", counting},
      {"functional independence", independence},
      {"transformation law", transformation_law},
      {"invariant differentiation", differentiation},
      {"interface", interface},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << n << ". " << name << " (" << secs
              << " s) " << r.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
