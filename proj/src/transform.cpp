#include "difinv/transform.hpp"

#include <algorithm>

#include "difinv/errors.hpp"
#include "difinv/syntax.hpp"

namespace difinv {

namespace {

RatFunc var(JetVar v) { return RatFunc(DiffPoly::var(v)); }
RatFunc param(Param p) { return var(JetVar::param(p)); }
RatFunc dz(const RatFunc& r) { return rat_derivative(r, Derivation::Z); }

Rational factorial(int k) {
  Rational out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

TransformedEquation transform_coefficients(int n, const std::vector<int>& slots, EtaMode eta) {
  if (n < 1 || n > kMaxTransformOrder) {
    throw LimitError("transformations are supported for orders 1.." +
                     std::to_string(kMaxTransformOrder) + ", got " + std::to_string(n));
  }
  for (int j : slots) {
    if (j < 1 || j > n) throw DomainError("coefficient slot a" + std::to_string(j) + " out of range");
  }
  if (eta == EtaMode::Canonical && n % 2 == 0) {
    throw DomainError("canonical eta = c xi'^((n-1)/2) needs odd n");
  }
  const RatFunc xi1 = var(JetVar::xi(1));
  RatFunc h = eta == EtaMode::General
                  ? var(JetVar::eta(0))
                  : param(Param::C) * pow(xi1, (n - 1) / 2);

  // y^(k) = sum_i c[k][i] w^(i), with d/dx = (1/xi') d/dz
  std::vector<std::vector<RatFunc>> c(static_cast<std::size_t>(n) + 1);
  c[0] = {h};
  for (int k = 0; k < n; ++k) {
    const auto& prev = c[static_cast<std::size_t>(k)];
    std::vector<RatFunc> next(prev.size() + 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] += dz(prev[i]);
      next[i + 1] += prev[i];
    }
    for (auto& t : next) t = t / xi1;
    c[static_cast<std::size_t>(k) + 1] = std::move(next);
  }

  std::vector<RatFunc> e(static_cast<std::size_t>(n) + 1);
  auto add = [&](const RatFunc& a, int k) {
    const auto& row = c[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < row.size(); ++i) e[i] += a * row[i];
  };
  add(RatFunc(1), n);
  for (int j : slots) add(var(JetVar::comp_coef(j, 0)), n - j);

  TransformedEquation out;
  out.n = n;
  out.slots = slots;
  out.eta = eta;
  const RatFunc& lead = e[static_cast<std::size_t>(n)];
  for (int j = 1; j <= n; ++j) out.A[j] = e[static_cast<std::size_t>(n - j)] / lead;
  return out;
}

RatFunc schwarzian() {
  const RatFunc x1 = var(JetVar::xi(1)), x2 = var(JetVar::xi(2)), x3 = var(JetVar::xi(3));
  return (x1 * x3 - RatFunc(Rational(3, 2)) * x2 * x2) / (x1 * x1);
}

std::map<JetVar, RatFunc> xi_jets_of(const RatFunc& g, int order) {
  std::map<JetVar, RatFunc> out;
  RatFunc cur = g;
  for (int k = 0; k <= order; ++k) {
    out.emplace(JetVar::xi(k), cur);
    if (k < order) cur = dz(cur);
  }
  return out;
}

RatFunc schwarzian(const RatFunc& g) { return substitute_rational(schwarzian(), xi_jets_of(g, 3)); }

RatFunc mobius_reduce(const RatFunc& r) {
  int top = 0;
  for (const DiffPoly* p : {&r.num(), &r.den()}) top = std::max(top, max_order(*p, VarKind::XiJet));
  if (top < 3) return r;
  const RatFunc x1 = var(JetVar::xi(1)), x2 = var(JetVar::xi(2));
  std::map<JetVar, RatFunc> values;
  for (int k = 3; k <= top; ++k) {
    values.emplace(JetVar::xi(k), RatFunc(factorial(k) / pow(Rational(2), long{k - 1})) *
                                      pow(x2, k - 1) / pow(x1, k - 2));
  }
  return substitute_rational(r, values);
}

RatFunc mobius_map() {
  return (param(Param::Alpha) * var(JetVar::z()) + param(Param::Beta)) /
         (param(Param::Gamma) * var(JetVar::z()) + param(Param::Delta));
}

RatFunc translation_map() { return var(JetVar::z()) + param(Param::Beta); }

LawReport verify_transformation_law(const Invariant& s, const GeneratorContext& ctx, Family family) {
  const auto* poly = std::get_if<DiffPoly>(&s.expr);
  if (s.kind != InvariantKind::Relative || poly == nullptr) {
    throw DomainError(s.name + " is not a relative polynomial invariant");
  }
  if (Verdict v = check(s, ctx.field, ctx.mu); !v.verified()) {
    throw VerificationError(s.name + " is not verified under the generator; residual " +
                            to_text(v.residual));
  }
  if (s.index.get_den() != 1) throw DomainError("transformation law needs an integer index");
  const int m = static_cast<int>(s.index.get_num().get_si());
  const int n = ctx.field.n;
  const int r = std::max(0, max_order(*poly));

  TransformedEquation t = transform_coefficients(n, ctx.field.slots(), EtaMode::Canonical);
  LawReport out;
  out.family = family;
  out.index = s.index;
  out.a1_vanishes = mobius_reduce(t.A[1]).is_zero();
  out.a2_vanishes = n < 2 || mobius_reduce(t.A[2]).is_zero();

  // S at the new coefficients, with their z-derivatives
  std::map<JetVar, RatFunc> new_jets;
  std::map<JetVar, DiffPoly> old_jets;
  for (int j : t.slots) {
    RatFunc a = mobius_reduce(t.A[j]);
    for (int k = 0; k <= r; ++k) {
      new_jets.emplace(JetVar::coef(j, k), a);
      old_jets.emplace(JetVar::coef(j, k), DiffPoly::var(JetVar::comp_coef(j, k)));
      if (k < r) a = mobius_reduce(dz(a));
    }
  }
  const RatFunc lhs = substitute_rational(*poly, new_jets);
  const RatFunc old = RatFunc(substitute(*poly, old_jets));

  const RatFunc g = family == Family::Mobius ? mobius_map() : translation_map();
  const auto jets = xi_jets_of(g, 2);
  auto concrete = [&](const RatFunc& e) { return substitute_rational(e, jets); };

  out.derivative_residual = concrete(lhs - pow(var(JetVar::xi(1)), m) * old);
  out.value_residual = concrete(lhs - pow(var(JetVar::xi(0)), m) * old);
  out.derivative_law = out.derivative_residual.is_zero();
  out.value_law = out.value_residual.is_zero();
  return out;
}

VectorField induced_generator(const DiffPoly& f, int n, const std::vector<int>& slots) {
  for (JetVar v : f.variables()) {
    if (v.kind() != VarKind::Indep && v.kind() != VarKind::Param) {
      throw ConfigError("induced generator: f must depend on x and parameters only");
    }
  }
  if (!coefficient_in(f, JetVar::indep(), 3).is_zero() ||
      std::any_of(f.terms().begin(), f.terms().end(),
                  [](const Term& t) { return t.mono.exponent(JetVar::indep()) > 2; })) {
    throw ConfigError("induced generator: f must have degree at most 2 in x");
  }
  if (n % 2 == 0) throw ConfigError("induced generator: needs odd n");

  const JetVar eps = JetVar::param(Param::Eps);
  const DiffPoly e = DiffPoly::var(eps);
  const DiffPoly fz = substitute(f, {{JetVar::indep(), DiffPoly::var(JetVar::z())}});
  const Rational half(n - 1, 2);

  // xi = z + eps f(z), eta = 1 + eps (n-1)/2 f'(z), both to first order
  std::map<JetVar, DiffPoly> jets;
  DiffPoly fk = fz;
  for (int k = 0; k <= n + 1; ++k) {
    DiffPoly xi_k = e * fk;
    if (k == 0) xi_k += DiffPoly::var(JetVar::z());
    if (k == 1) xi_k += DiffPoly(1);
    jets.emplace(JetVar::xi(k), xi_k);
    fk = total_derivative(fk, Derivation::Z);
    DiffPoly eta_k = half * (e * fk);
    if (k == 0) eta_k += DiffPoly(1);
    jets.emplace(JetVar::eta(k), eta_k);
  }
  for (int j : slots) jets.emplace(JetVar::comp_coef(j, 0), DiffPoly::var(JetVar::coef(j, 0)));
  const std::map<JetVar, DiffPoly> back{{JetVar::z(), DiffPoly::var(JetVar::indep())}};
  const Truncation first_order{eps, 1};

  TransformedEquation t = transform_coefficients(n, slots, EtaMode::General);
  VectorField out;
  out.n = n;
  out.f = f;
  for (int j : slots) {
    const RatFunc& a = t.A[j];
    DiffPoly num = substitute(a.num(), jets, first_order);
    DiffPoly den = substitute(a.den(), jets, first_order);
    DiffPoly n0 = coefficient_in(num, eps, 0), n1 = coefficient_in(num, eps, 1);
    DiffPoly d0 = coefficient_in(den, eps, 0), d1 = coefficient_in(den, eps, 1);
    auto c0 = d0.as_constant();
    if (!c0 || *c0 == 0) throw ConfigError("induced generator: degenerate expansion");
    // d/d eps (N/D) at 0, with D(0) constant
    DiffPoly b = (n1 * d0 - n0 * d1) * (Rational(1) / (*c0 * *c0));
    // the new variable is z = x - eps f, so the field is negated
    out.phis[j] = -substitute(b, back);
  }
  out.validate();
  return out;
}

VectorField induced_generator_order5() { return induced_generator(parse("k1 + k2*x + k3*x^2")); }

}  // namespace difinv
