#include "difinv/halphen.hpp"

#include "difinv/errors.hpp"
#include "difinv/rat_func.hpp"
#include "difinv/syntax.hpp"

namespace difinv {

namespace {

const DiffPoly& relative_poly(const Invariant& r) {
  const auto* p = std::get_if<DiffPoly>(&r.expr);
  if (r.kind != InvariantKind::Relative || p == nullptr) {
    throw DomainError(r.name + " is not a relative polynomial invariant");
  }
  return *p;
}

DiffPoly dx(const DiffPoly& p) { return total_derivative(p, Derivation::X); }

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string exponent_text(const Rational& e) {
  return e.get_den() == 1 ? rational_text(e) : "(" + rational_text(e) + ")";
}

PowerFactor factor_of(const Invariant& r, const Rational& exponent) {
  return {r.name, relative_poly(r), exponent, r.index};
}

void require_verified(const Invariant& inv, const GeneratorContext& ctx) {
  Verdict v = check(inv, ctx.field, ctx.mu);
  if (!v.verified()) {
    throw VerificationError(inv.name + " is not invariant; residual " + to_text(v.residual));
  }
}

}  // namespace

Rational theta(const Rational& m, const Rational& sigma, int q) { return m + q * (sigma + 1); }

Invariant phi(const Invariant& r1, const Invariant& r2) {
  const DiffPoly& p1 = relative_poly(r1);
  const DiffPoly& p2 = relative_poly(r2);
  DiffPoly e = r1.index * (p1 * dx(p2)) - r2.index * (p2 * dx(p1));
  return make_relative("phi(" + r1.name + "," + r2.name + ")", std::move(e),
                       r1.index + r2.index + 1, Provenance::Sequence);
}

Invariant chi(const Invariant& r1, const Invariant& r2) {
  Invariant f = phi(r1, r2);
  PowerProduct pp;
  pp.factors = {factor_of(f, r2.index), factor_of(r2, -(r1.index + r2.index + 1))};
  return make_absolute("chi(" + r1.name + "," + r2.name + ")", std::move(pp), Provenance::Sequence);
}

Invariant chi0(const Invariant& r1, const Invariant& r2) {
  PowerProduct pp;
  pp.factors = {factor_of(r1, r2.index), factor_of(r2, -r1.index)};
  return make_absolute("chi_0(" + r1.name + "," + r2.name + ")", std::move(pp),
                       Provenance::Sequence);
}

std::vector<Invariant> phi_seq(const Invariant& s, int q, const Invariant& base) {
  if (q < 1) throw std::invalid_argument("phi_seq needs at least one step");
  const DiffPoly& b = relative_poly(base);
  const DiffPoly db = dx(b);
  const Rational& sigma = base.index;
  DiffPoly cur = relative_poly(s);
  std::vector<Invariant> out;
  for (int step = 1; step <= q; ++step) {
    cur = theta(s.index, sigma, step - 1) * (cur * db) - sigma * (b * dx(cur));
    out.push_back(make_relative("phi_" + std::to_string(step) + "(" + s.name + "," + base.name + ")",
                                cur, theta(s.index, sigma, step), Provenance::Sequence));
  }
  return out;
}

std::vector<Invariant> chi_seq(const Invariant& s, int q, const Invariant& base) {
  std::vector<Invariant> out;
  for (const Invariant& f : phi_seq(s, q, base)) {
    PowerProduct pp;
    pp.factors = {factor_of(f, base.index), factor_of(base, -f.index)};
    std::string name = f.name;
    name.replace(0, 3, "chi");
    out.push_back(make_absolute(std::move(name), std::move(pp), Provenance::Sequence));
  }
  return out;
}

Invariant quotient_absolute(const Invariant& s1, const Invariant& s2) {
  relative_poly(s1);
  relative_poly(s2);
  Rational a = 1, b = 1;
  if (s1.index == 0) {
    b = 0;
  } else if (s2.index == 0) {
    a = 0;
  } else {
    Rational r = s2.index / s1.index;  // a / b with a m = b k
    a = r.get_num();
    b = r.get_den();
    if (a < 0) {
      a = -a;
      b = -b;
    }
  }
  PowerProduct pp;
  if (a != 0) pp.factors.push_back(factor_of(s1, a));
  if (b != 0) pp.factors.push_back(factor_of(s2, -b));
  std::string name = s1.name + "^" + exponent_text(a) + "/" + s2.name + "^" + exponent_text(b);
  InvariantExpr e = pp;
  if (auto r = pp.expand()) e = *r;
  return make_absolute(std::move(name), std::move(e), Provenance::Quotient);
}

Invariant power_of(const Invariant& s, const Rational& e) {
  PowerProduct pp;
  pp.factors = {factor_of(s, e)};
  Invariant inv;
  inv.name = s.name + "^" + exponent_text(e);
  inv.order = pp.order();
  inv.expr = std::move(pp);
  inv.kind = InvariantKind::Relative;
  inv.index = e * s.index;
  if (s.weight) {
    Rational w = e * *s.weight;
    if (w.get_den() == 1) inv.weight = static_cast<int>(w.get_num().get_si());
  }
  inv.provenance = Provenance::Quotient;
  return inv;
}

std::vector<Invariant> fundamental_set(int p, const Seeds& seeds, const GeneratorContext& ctx) {
  if (p < 1) throw std::invalid_argument("fundamental set needs order p >= 1");
  std::vector<Invariant> out;
  Invariant i0 = quotient_absolute(seeds.r0, seeds.s0);
  i0.name = "I0";
  out.push_back(std::move(i0));
  const Invariant* rel[] = {&seeds.s1, &seeds.s2, &seeds.s3};
  std::vector<std::vector<Invariant>> chis;
  for (const Invariant* s : rel) {
    chis.push_back(p > 1 ? chi_seq(*s, p - 1, seeds.s0) : std::vector<Invariant>{});
  }
  for (int k = 0; k < p; ++k) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.push_back(k == 0 ? chi0(*rel[j], seeds.s0) : chis[j][static_cast<std::size_t>(k - 1)]);
    }
  }
  for (const auto& inv : out) require_verified(inv, ctx);
  return out;
}

RelativeSet relative_set(const Seeds& seeds, const GeneratorContext& ctx,
                         std::optional<Rational> common_index) {
  RelativeSet out;
  auto emit = [&](const Invariant& s, const Invariant& base, int k) {
    Invariant zero = s;
    zero.name = "phi_0(" + s.name + "," + base.name + ")";
    zero.provenance = Provenance::Sequence;
    out.sequence.push_back(std::move(zero));
    for (auto& f : phi_seq(s, k, base)) out.sequence.push_back(std::move(f));
  };
  emit(seeds.s1, seeds.s0, 1);
  emit(seeds.s2, seeds.s0, 1);
  emit(seeds.s3, seeds.s0, 1);
  emit(seeds.r0, seeds.s0, 2);
  emit(seeds.s0, seeds.r0, 2);
  for (const auto& inv : out.sequence) require_verified(inv, ctx);
  if (common_index) {
    for (const Invariant* s : {&seeds.s0, &seeds.r0, &seeds.s1, &seeds.s2, &seeds.s3}) {
      out.common.push_back(power_of(*s, *common_index / s->index));
    }
    for (const auto& inv : out.common) require_verified(inv, ctx);
  }
  return out;
}

namespace {

RatFunc expanded(const Invariant& inv) {
  auto r = as_rational(inv.expr);
  if (!r) throw DomainError(inv.name + " has fractional exponents and cannot be differentiated");
  return *r;
}

}  // namespace

Invariant invariant_derivative(const Invariant& i, const Invariant& i0,
                               const GeneratorContext& ctx) {
  RatFunc d0 = rat_derivative(expanded(i0), Derivation::X);
  if (d0.is_zero()) throw DomainError(i0.name + " is constant; D_x(" + i0.name + ") = 0");
  RatFunc d = rat_derivative(expanded(i), Derivation::X) / d0;
  Invariant out = make_absolute("D(" + i.name + ")/D(" + i0.name + ")", std::move(d),
                                Provenance::Sequence);
  require_verified(out, ctx);
  return out;
}

ClosedForm derivative_closed_form(const Invariant& i, const Invariant& s, const Invariant& i0,
                                  const Invariant& r0, const Invariant& s0) {
  auto exponent_of = [](const Invariant& inv, const Invariant& base) {
    const auto* pp = std::get_if<PowerProduct>(&inv.expr);
    if (pp != nullptr) {
      for (const auto& f : pp->factors) {
        if (f.base == relative_poly(base)) return f.exponent;
      }
    }
    throw DomainError(inv.name + " is not a power product involving " + base.name);
  };
  const Rational e = exponent_of(i, s);
  const Rational e0 = exponent_of(i0, r0);

  const DiffPoly& S = relative_poly(s);
  const DiffPoly& S0 = relative_poly(s0);
  const DiffPoly& R0 = relative_poly(r0);
  const Rational& sigma = s0.index;
  RatFunc ii = expanded(i), ii0 = expanded(i0);

  ClosedForm out;
  out.factor = e / e0;
  out.derivative = rat_derivative(ii, Derivation::X) / rat_derivative(ii0, Derivation::X);
  RatFunc top(s.index * (S * dx(S0)) - sigma * (S0 * dx(S)));
  RatFunc bottom(r0.index * (R0 * dx(S0)) - sigma * (S0 * dx(R0)));
  out.closed = RatFunc(out.factor) * (ii / ii0) * RatFunc(R0, S) * top / bottom;
  out.holds = out.derivative == out.closed;
  return out;
}

std::optional<Rational> scalar_multiple(const DiffPoly& p, const DiffPoly& q) {
  if (q.is_zero()) return p.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  if (p.is_zero()) return Rational(0);
  if (p.leading().mono != q.leading().mono) return std::nullopt;
  Rational c = p.leading().coeff / q.leading().coeff;
  if (p != c * q) return std::nullopt;
  return c;
}

}  // namespace difinv
