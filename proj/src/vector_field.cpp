#include "difinv/vector_field.hpp"

#include <algorithm>
#include <string>

#include "difinv/errors.hpp"
#include "difinv/syntax.hpp"

namespace difinv {

std::vector<int> VectorField::slots() const {
  std::vector<int> out;
  for (const auto& [j, phi] : phis) out.push_back(j);
  return out;
}

void VectorField::validate() const {
  auto ok = [](const DiffPoly& p) {
    for (JetVar v : p.variables()) {
      switch (v.kind()) {
        case VarKind::Indep:
        case VarKind::Param:
          break;
        case VarKind::Coef:
          if (v.order() != 0) return false;
          break;
        default:
          return false;
      }
    }
    return true;
  };
  if (!ok(f)) throw ConfigError("generator: d/dx component is not a point-transformation term");
  for (const auto& [j, phi] : phis) {
    if (!ok(phi)) {
      throw ConfigError("generator: component for a" + std::to_string(j) +
                        " is not a point-transformation term");
    }
  }
}

VectorField builtin_generator_order5() {
  VectorField v;
  v.n = 5;
  v.f = parse("k1 + x*(k2 + k3*x)");
  v.phis[3] = parse("-3*a3*(k2 + 2*k3*x)");
  v.phis[4] = parse("-2*(-3*a3*k3 + 2*a4*(k2 + 2*k3*x))");
  v.phis[5] = parse("-4*a4*k3 - 5*a5*(k2 + 2*k3*x)");
  return v;
}

ProlongedField::ProlongedField(VectorField base, int order)
    : base_(std::move(base)), order_(order) {
  if (order < 0) throw std::invalid_argument("negative prolongation order");
  if (order > max_jet_order()) {
    throw LimitError("prolongation order " + std::to_string(order) +
                     " exceeds the configured maximum " + std::to_string(max_jet_order()));
  }
  base_.validate();
  const DiffPoly df = total_derivative(base_.f, Derivation::X);
  for (const auto& [j, phi] : base_.phis) {
    DiffPoly z = phi;
    zetas_.emplace(std::make_pair(j, 0), z);
    for (int k = 1; k <= order; ++k) {
      z = total_derivative(z, Derivation::X) - DiffPoly::var(JetVar::coef(j, k)) * df;
      zetas_.emplace(std::make_pair(j, k), z);
    }
  }
}

const DiffPoly& ProlongedField::zeta(int j, int k) const {
  auto it = zetas_.find({j, k});
  if (it == zetas_.end()) {
    throw DomainError("no prolongation component for a" + std::to_string(j) + " at order " +
                      std::to_string(k));
  }
  return it->second;
}

DiffPoly ProlongedField::apply(const DiffPoly& F) const {
  DiffPoly result;
  for (JetVar v : F.variables()) {
    switch (v.kind()) {
      case VarKind::Param:
        break;
      case VarKind::Indep:
        result += base_.f * partial_derivative(F, v);
        break;
      case VarKind::Coef: {
        if (v.order() > order_) {
          throw DomainError("expression needs prolongation order " + std::to_string(v.order()) +
                            ", field is prolonged to " + std::to_string(order_));
        }
        if (!base_.phis.count(v.index())) {
          throw DomainError("coefficient a" + std::to_string(v.index()) +
                            " is not a slot of the generator");
        }
        result += zeta(v.index(), v.order()) * partial_derivative(F, v);
        break;
      }
      default:
        throw DomainError("variable " + v.name() + " is outside the generator's jet space");
    }
  }
  return result;
}

RatFunc ProlongedField::apply(const RatFunc& F) const {
  DiffPoly xn = apply(F.num());
  if (F.is_polynomial()) return RatFunc(xn * (Rational(1) / *F.den().as_constant()));
  DiffPoly xd = apply(F.den());
  return RatFunc(xn * F.den() - F.num() * xd, F.den() * F.den());
}

ProlongedField prolong(const VectorField& v, int order) { return ProlongedField(v, order); }

DiffPoly apply(const VectorField& v, const DiffPoly& F) {
  return prolong(v, std::max(0, max_order(F))).apply(F);
}

RatFunc apply(const VectorField& v, const RatFunc& F) {
  return prolong(v, std::max(0, max_order(F))).apply(F);
}

DiffPoly multiplier(const VectorField& v, const DiffPoly& s0) {
  Weight w = weight(s0);
  if (!w.isobaric() || w.value == 0) {
    throw ConfigError("fundamental invariant must be isobaric of nonzero weight");
  }
  DiffPoly xs = apply(v, s0);
  auto q = divide_exact(xs, s0);
  if (!q) throw ConfigError("multiplier -(X S0)/(sigma S0) is not a polynomial");
  return *q * Rational(-1, w.value);
}

Verdict check_relative(const DiffPoly& F, const Rational& m, const VectorField& v,
                       const DiffPoly& mu) {
  return {apply(v, F) + (mu * F) * m};
}

Verdict check_absolute(const RatFunc& F, const VectorField& v) {
  if (F.is_polynomial()) return {apply(v, F.num())};
  auto p = prolong(v, std::max(0, max_order(F)));
  // numerator of X(N/D)
  return {p.apply(F.num()) * F.den() - F.num() * p.apply(F.den())};
}

namespace {

DiffPoly log_derivative_numerator(const PowerProduct& F, const VectorField& v) {
  auto p = prolong(v, std::max(0, F.order()));
  DiffPoly sum;
  for (std::size_t i = 0; i < F.factors.size(); ++i) {
    DiffPoly term = p.apply(F.factors[i].base) * F.factors[i].exponent;
    for (std::size_t l = 0; l < F.factors.size(); ++l) {
      if (l != i) term = term * F.factors[l].base;
    }
    sum += term;
  }
  return sum;
}

DiffPoly product_of_bases(const PowerProduct& F) {
  DiffPoly prod(1);
  for (const auto& f : F.factors) prod = prod * f.base;
  return prod;
}

}  // namespace

Verdict check_relative(const PowerProduct& F, const Rational& m, const VectorField& v,
                       const DiffPoly& mu) {
  return {log_derivative_numerator(F, v) + (mu * product_of_bases(F)) * m};
}

Verdict check_absolute(const PowerProduct& F, const VectorField& v) {
  return {log_derivative_numerator(F, v)};
}

GeneratorContext make_context(VectorField v, DiffPoly s0) {
  DiffPoly mu = multiplier(v, s0);
  return {std::move(v), std::move(s0), std::move(mu)};
}

Verdict check(const Invariant& inv, const VectorField& v, const DiffPoly& mu) {
  const bool absolute = inv.kind == InvariantKind::Absolute;
  if (const auto* p = std::get_if<DiffPoly>(&inv.expr)) {
    return absolute ? check_absolute(RatFunc(*p), v) : check_relative(*p, inv.index, v, mu);
  }
  if (const auto* r = std::get_if<RatFunc>(&inv.expr)) {
    if (absolute) return check_absolute(*r, v);
    // relative rational expression: X(N/D) + m mu N/D, numerator only
    auto pv = prolong(v, std::max(0, max_order(*r)));
    return {pv.apply(r->num()) * r->den() - r->num() * pv.apply(r->den()) +
            (mu * r->num() * r->den()) * inv.index};
  }
  const auto& pp = std::get<PowerProduct>(inv.expr);
  return absolute ? check_absolute(pp, v) : check_relative(pp, inv.index, v, mu);
}

std::optional<Rational> infer_index(const DiffPoly& F, const VectorField& v, const DiffPoly& mu) {
  if (F.is_zero()) throw DomainError("infer_index of the zero polynomial");
  DiffPoly xf = apply(v, F);
  DiffPoly mf = mu * F;
  if (mf.is_zero()) return xf.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const Term& lead = mf.leading();
  Rational m = -xf.coefficient(lead.mono) / lead.coeff;
  if (!(xf + mf * m).is_zero()) return std::nullopt;
  return m;
}

}  // namespace difinv
