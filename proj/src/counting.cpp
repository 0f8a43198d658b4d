#include "difinv/counting.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "difinv/errors.hpp"
#include "difinv/kernels.hpp"
#include "difinv/linalg.hpp"

namespace difinv {

Point PointSampler::sample(std::size_t trial, const std::vector<JetVar>& vars) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> num(-radius, radius);
  std::uniform_int_distribution<int> den(1, 3);
  Point pt;
  for (JetVar v : vars) {
    const bool must_be_nonzero =
        std::find(nonzero.begin(), nonzero.end(), v) != nonzero.end();
    Rational q;
    do {
      q = Rational(num(rng), den(rng));
      q.canonicalize();
    } while (must_be_nonzero && q == 0);
    pt.emplace(v, q);
  }
  return pt;
}

long gamma_formula(int n, int p) { return n + 4 - static_cast<long>(p) * (n - 2); }

namespace {

RankReport summarize(const std::vector<std::optional<std::size_t>>& ranks) {
  RankReport r;
  for (const auto& x : ranks) {
    if (!x) {
      ++r.singular;
      continue;
    }
    ++r.points;
    r.rank = std::max(r.rank, *x);
  }
  for (const auto& x : ranks) {
    if (x && *x == r.rank) ++r.at_max;
  }
  return r;
}

}  // namespace

CountReport invariant_count(const VectorField& v, int p, std::size_t trials,
                            const PointSampler& sampler, Exec exec) {
  if (p < 0) throw std::invalid_argument("prolongation order must be nonnegative");
  ProlongedField field(v, p);

  std::vector<JetVar> vars{JetVar::indep()};
  for (int j : v.slots()) {
    for (int k = 0; k <= p; ++k) vars.push_back(JetVar::coef(j, k));
  }

  // Parameter components: the generator is sum_l k_l X_l.
  std::set<JetVar> params;
  auto collect = [&](const DiffPoly& q) {
    for (JetVar x : q.variables()) {
      if (x.kind() == VarKind::Param) params.insert(x);
    }
  };
  collect(v.f);
  for (const auto& [j, phi] : v.phis) collect(phi);

  // components[l][c]: coefficient of parameter l in the d/d(vars[c]) entry
  std::vector<std::vector<DiffPoly>> components;
  for (JetVar param : params) {
    std::vector<DiffPoly> row;
    auto linear_part = [&](const DiffPoly& q) { return coefficient_in(q, param, 1); };
    row.push_back(linear_part(v.f));
    for (std::size_t c = 1; c < vars.size(); ++c) {
      row.push_back(linear_part(field.zeta(vars[c].index(), vars[c].order())));
    }
    components.push_back(std::move(row));
  }

  auto trial = [&](std::size_t t) -> std::optional<std::size_t> {
    Point pt = sampler.sample(t, vars);
    std::vector<std::vector<Rational>> m;
    for (const auto& row : components) {
      std::vector<Rational> values;
      for (const auto& entry : row) values.push_back(evaluate(entry, pt));
      m.push_back(std::move(values));
    }
    return rank(m);
  };

  CountReport report;
  report.order = p;
  report.jet_variables = vars.size();
  report.rank = summarize(kernels::run_trials(trials, trial, exec));
  report.count = static_cast<long>(vars.size()) - static_cast<long>(report.rank.rank);
  report.formula = gamma_formula(v.n, p);
  report.formula_agrees = report.formula == report.count;
  return report;
}

namespace {

// Symbolic pieces of one Jacobian row, prepared once for all trials.
struct RowPlan {
  enum class Shape { Poly, Quotient, Product } shape;
  std::vector<DiffPoly> bases;          // Poly: {p}; Quotient: {num, den}; Product: factors
  std::vector<Rational> exponents;      // Product only
  std::vector<std::vector<DiffPoly>> partials;  // partials[b][c]
};

}  // namespace

RankReport jacobian_rank(const std::vector<Invariant>& invs, std::size_t trials,
                         const PointSampler& sampler, Exec exec) {
  if (invs.empty()) return {};
  std::set<JetVar> var_set;
  std::vector<RowPlan> plans;
  for (const auto& inv : invs) {
    RowPlan plan;
    if (const auto* p = std::get_if<DiffPoly>(&inv.expr)) {
      plan.shape = RowPlan::Shape::Poly;
      plan.bases = {*p};
    } else if (const auto* r = std::get_if<RatFunc>(&inv.expr)) {
      plan.shape = RowPlan::Shape::Quotient;
      plan.bases = {r->num(), r->den()};
    } else {
      const auto& pp = std::get<PowerProduct>(inv.expr);
      plan.shape = RowPlan::Shape::Product;
      for (const auto& f : pp.factors) {
        plan.bases.push_back(f.base);
        plan.exponents.push_back(f.exponent);
      }
    }
    for (const auto& b : plan.bases) {
      for (JetVar x : b.variables()) var_set.insert(x);
    }
    plans.push_back(std::move(plan));
  }
  const std::vector<JetVar> vars(var_set.begin(), var_set.end());
  for (auto& plan : plans) {
    for (const auto& b : plan.bases) {
      std::vector<DiffPoly> row;
      for (JetVar x : vars) row.push_back(partial_derivative(b, x));
      plan.partials.push_back(std::move(row));
    }
  }

  auto trial = [&](std::size_t t) -> std::optional<std::size_t> {
    Point pt = sampler.sample(t, vars);
    std::vector<std::vector<Rational>> m;
    for (const auto& plan : plans) {
      std::vector<Rational> values(plan.bases.size());
      for (std::size_t b = 0; b < plan.bases.size(); ++b) values[b] = evaluate(plan.bases[b], pt);
      std::vector<Rational> row(vars.size(), Rational(0));
      switch (plan.shape) {
        case RowPlan::Shape::Poly:
          for (std::size_t c = 0; c < vars.size(); ++c) row[c] = evaluate(plan.partials[0][c], pt);
          break;
        case RowPlan::Shape::Quotient: {
          const Rational& n = values[0];
          const Rational& d = values[1];
          if (d == 0) return std::nullopt;
          for (std::size_t c = 0; c < vars.size(); ++c) {
            row[c] = (evaluate(plan.partials[0][c], pt) * d - n * evaluate(plan.partials[1][c], pt)) /
                     (d * d);
          }
          break;
        }
        case RowPlan::Shape::Product:
          for (std::size_t b = 0; b < plan.bases.size(); ++b) {
            if (values[b] == 0) return std::nullopt;
            for (std::size_t c = 0; c < vars.size(); ++c) {
              row[c] += plan.exponents[b] * evaluate(plan.partials[b][c], pt) / values[b];
            }
          }
          break;
      }
      m.push_back(std::move(row));
    }
    return rank(m);
  };

  RankReport report = summarize(kernels::run_trials(trials, trial, exec));
  if (report.points == 0) throw SamplingError("every sampled point was singular");
  return report;
}

}  // namespace difinv
