#include "doctest.h"

#include <random>

#include "difinv/errors.hpp"
#include "difinv/syntax.hpp"
#include "difinv/transform.hpp"
#include "support/generators.hpp"

using namespace difinv;
using difinv::testing::induced_order5;

namespace {

RatFunc v(JetVar x) { return RatFunc(DiffPoly::var(x)); }
RatFunc z() { return v(JetVar::z()); }

}  // namespace

TEST_CASE("first-order equation") {
  auto t = transform_coefficients(1, {1});
  RatFunc expected = v(JetVar::xi(1)) * v(JetVar::comp_coef(1)) + v(JetVar::eta(1)) / v(JetVar::eta(0));
  CHECK(t.A[1] == expected);
  CHECK_THROWS_AS(transform_coefficients(7, {3}), LimitError);
  CHECK_THROWS_AS(transform_coefficients(0, {}), LimitError);
  CHECK_THROWS_AS(transform_coefficients(4, {3}, EtaMode::Canonical), DomainError);
}

TEST_CASE("identity transformation leaves the coefficients alone") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> slots;
    for (int j = 1; j <= n; ++j) slots.push_back(j);
    auto t = transform_coefficients(n, slots);
    std::map<JetVar, RatFunc> id;
    for (int k = 0; k <= n + 1; ++k) {
      id.emplace(JetVar::xi(k), k == 0 ? z() : RatFunc(k == 1 ? 1 : 0));
      id.emplace(JetVar::eta(k), RatFunc(k == 0 ? 1 : 0));
    }
    for (int j = 1; j <= n; ++j) {
      CHECK(substitute_rational(t.A[j], id) == v(JetVar::comp_coef(j)));
    }
  }
}

TEST_CASE("canonical family keeps the reduced form") {
  auto t = transform_coefficients(5, {3, 4, 5}, EtaMode::Canonical);
  CHECK(t.A[1].is_zero());
  CHECK_FALSE(t.A[2].is_zero());
  CHECK(mobius_reduce(t.A[2]).is_zero());
  // A2 = n(n^2-1)/12 times the Schwarzian
  CHECK(t.A[2] == RatFunc(10) * schwarzian());
  CHECK(mobius_reduce(t.A[3]) == pow(v(JetVar::xi(1)), 3) * v(JetVar::comp_coef(3)));
}

TEST_CASE("schwarzian") {
  CHECK(schwarzian(mobius_map()).is_zero());
  CHECK(schwarzian(z()).is_zero());
  CHECK(schwarzian(z() * z()) == RatFunc(Rational(-3, 2)) / (z() * z()));
  // vanishes on no other small polynomial sample
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 50; ++i) {
    RatFunc g = RatFunc(c(rng)) * pow(z(), 3) + RatFunc(c(rng)) * z() * z() +
                RatFunc(c(rng)) * z() + RatFunc(c(rng));
    bool affine = rat_derivative(rat_derivative(g, Derivation::Z), Derivation::Z).is_zero();
    bool constant = rat_derivative(g, Derivation::Z).is_zero();
    if (constant) continue;
    CHECK(schwarzian(g).is_zero() == affine);
  }
}

TEST_CASE("mobius reduction matches explicit maps") {
  const RatFunc g = mobius_map();
  const auto jets = xi_jets_of(g, 5);
  for (int k = 3; k <= 5; ++k) {
    RatFunc reduced = mobius_reduce(v(JetVar::xi(k)));
    CHECK(substitute_rational(reduced, jets) == jets.at(JetVar::xi(k)));
  }
}

TEST_CASE("induced generator") {
  VectorField translation = induced_generator(parse("k1"));
  for (const auto& [j, phi] : translation.phis) CHECK(phi.is_zero());
  CHECK(translation.f == parse("k1"));

  VectorField scaling = induced_generator(parse("k2*x"));
  CHECK(scaling.phis.at(3) == parse("-3*a3*k2"));

  VectorField full = induced_generator_order5();
  CHECK(full == induced_order5());
  VectorField printed = builtin_generator_order5();
  CHECK(full.phis.at(3) == printed.phis.at(3));
  CHECK(full.phis.at(5) == printed.phis.at(5));
  CHECK(full.phis.at(4) - printed.phis.at(4) == parse("-12*a3*k3"));

  // linear in f
  VectorField quad = induced_generator(parse("k3*x^2"));
  for (int j : {3, 4, 5}) {
    CHECK(full.phis.at(j) == translation.phis.at(j) + scaling.phis.at(j) + quad.phis.at(j));
  }
  CHECK(induced_generator(parse("3*x^2 - x"), 5).phis.at(3) == parse("-3*a3*(6*x - 1)"));
  CHECK_THROWS_AS(induced_generator(parse("x^3")), ConfigError);
  CHECK_THROWS_AS(induced_generator(parse("a3")), ConfigError);
}

TEST_CASE("transformation law") {
  GeneratorContext ctx = make_context(induced_order5(), parse("a3"));
  Invariant s0 = make_relative("S0", parse("a3"), 3, Provenance::Printed);
  LawReport r = verify_transformation_law(s0, ctx);
  CHECK(r.a1_vanishes);
  CHECK(r.a2_vanishes);
  CHECK(r.derivative_law);
  CHECK_FALSE(r.value_law);

  Invariant s1 = make_relative("S1", parse("-a4 + a3'"), 4, Provenance::Printed);
  LawReport r1 = verify_transformation_law(s1, ctx);
  CHECK(r1.derivative_law);
  CHECK_FALSE(r1.value_law);

  LawReport tr = verify_transformation_law(s1, ctx, Family::Translation);
  CHECK(tr.derivative_law);

  Invariant bad = make_relative("bad", parse("a4"), 4, Provenance::Printed);
  CHECK_THROWS_AS(verify_transformation_law(bad, ctx), VerificationError);
}

namespace {

// Concrete coefficient functions of x, pushed through explicit (xi, eta).
std::map<int, RatFunc> push(const std::map<int, RatFunc>& a, const RatFunc& xi, const RatFunc& eta,
                            int n) {
  std::vector<int> slots;
  for (const auto& [j, f] : a) slots.push_back(j);
  auto t = transform_coefficients(n, slots);
  std::map<JetVar, RatFunc> values = xi_jets_of(xi, n + 1);
  RatFunc e = eta;
  for (int k = 0; k <= n + 1; ++k) {
    values.emplace(JetVar::eta(k), e);
    e = rat_derivative(e, Derivation::Z);
  }
  const std::map<JetVar, RatFunc> compose{{JetVar::indep(), xi}};
  for (const auto& [j, f] : a) {
    RatFunc d = f;
    for (int k = 0; k <= n; ++k) {
      values.emplace(JetVar::comp_coef(j, k), substitute_rational(d, compose));
      d = rat_derivative(d, Derivation::X);
    }
  }
  std::map<int, RatFunc> out;
  const std::map<JetVar, RatFunc> rename{{JetVar::z(), RatFunc(DiffPoly::var(JetVar::indep()))}};
  for (const auto& [j, f] : a) out[j] = substitute_rational(substitute_rational(t.A[j], values), rename);
  return out;
}

}  // namespace

TEST_CASE("property: composition of transformations") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> nz(1, 3);
  const RatFunc x(DiffPoly::var(JetVar::indep()));
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::map<int, RatFunc> a;
      for (int j = 1; j <= n; ++j) a[j] = RatFunc(c(rng)) * x * x + RatFunc(c(rng)) * x + RatFunc(c(rng));
      RatFunc xi1 = RatFunc(nz(rng)) * z() * z() + RatFunc(c(rng)) * z();
      RatFunc eta1 = RatFunc(nz(rng)) * z() + RatFunc(nz(rng));
      RatFunc xi2 = RatFunc(nz(rng)) * z() + RatFunc(c(rng));
      RatFunc eta2 = RatFunc(nz(rng)) * z() * z() + RatFunc(nz(rng));

      auto step = push(push(a, xi1, eta1, n), xi2, eta2, n);
      // composite: x = xi1(xi2(t)), y = eta1(xi2(t)) eta2(t) w
      const std::map<JetVar, RatFunc> at_xi2{{JetVar::z(), xi2}};
      RatFunc xi = substitute_rational(xi1, at_xi2);
      RatFunc eta = substitute_rational(eta1, at_xi2) * eta2;
      auto direct = push(a, xi, eta, n);
      for (int j = 1; j <= n; ++j) {
        CAPTURE(n);
        CAPTURE(j);
        CHECK(step[j] == direct[j]);
      }
    }
  }
}
