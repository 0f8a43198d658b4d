#include "doctest.h"

#include "difinv/errors.hpp"
#include "difinv/syntax.hpp"
#include "difinv/vector_field.hpp"
#include "support/generators.hpp"
#include "support/random_poly.hpp"

using namespace difinv;
using difinv::testing::induced_order5;
using difinv::testing::mu_order5;
using difinv::testing::PolyGen;

namespace {

std::vector<JetVar> jet_pool(int max_order) {
  std::vector<JetVar> pool{JetVar::indep()};
  for (int j = 3; j <= 5; ++j) {
    for (int k = 0; k <= max_order; ++k) pool.push_back(JetVar::coef(j, k));
  }
  return pool;
}

}  // namespace

TEST_CASE("printed generator and multiplier") {
  VectorField v = builtin_generator_order5();
  CHECK(v.n == 5);
  CHECK(v.slots() == std::vector<int>{3, 4, 5});
  CHECK(multiplier(v, parse("a3")) == mu_order5());
  CHECK(multiplier(induced_order5(), parse("a3")) == mu_order5());
}

TEST_CASE("prolongation components") {
  ProlongedField p(induced_order5(), 2);
  CHECK(p.zeta(3, 0) == parse("-3*a3*(k2 + 2*k3*x)"));
  // zeta(3,1) = D_x zeta(3,0) - a3' f'
  CHECK(p.zeta(3, 1) == parse("-6*k3*a3 - 4*a3'*(k2 + 2*k3*x)"));
  CHECK_THROWS_AS(p.zeta(3, 3), DomainError);
  CHECK_THROWS_AS(p.apply(parse("a3'''")), DomainError);
  CHECK_THROWS_AS(p.apply(parse("a6")), DomainError);
  CHECK_THROWS_AS(ProlongedField(induced_order5(), 13), LimitError);
  CHECK(apply(induced_order5(), parse("a3'''")) ==
        ProlongedField(induced_order5(), 3).apply(parse("a3'''")));
}

TEST_CASE("invalid generators are rejected") {
  VectorField v = induced_order5();
  v.phis[3] = parse("a3'");
  CHECK_THROWS_AS(v.validate(), ConfigError);
  CHECK_THROWS_AS(ProlongedField(v, 1), ConfigError);
  VectorField w = induced_order5();
  CHECK_THROWS_AS(multiplier(w, parse("a3*a4")), ConfigError);
}

TEST_CASE("relative invariant checks") {
  VectorField v = builtin_generator_order5();
  DiffPoly mu = mu_order5();
  CHECK(check_relative(parse("a3"), Rational(3), v, mu).verified());
  Verdict wrong = check_relative(parse("a3"), Rational(2), v, mu);
  CHECK_FALSE(wrong.verified());
  CHECK(wrong.residual == parse("-(k2 + 2*k3*x)*a3"));

  // The k3 sign of phi_4 decides R0 and S1.
  CHECK(check_relative(parse("3*a5*a3 - a4^2"), Rational(8), induced_order5(), mu).verified());
  CHECK(check_relative(parse("-a4 + a3'"), Rational(4), induced_order5(), mu).verified());
  CHECK(check_relative(parse("3*a5*a3 - a4^2"), Rational(8), v, mu).residual ==
        parse("-24*a3*a4*k3"));
  CHECK(check_relative(parse("-a4 + a3'"), Rational(4), v, mu).residual == parse("-12*a3*k3"));
  CHECK(check_relative(parse("3*a5*a3 + a4^2"), Rational(8), v, mu).verified());
  CHECK(check_relative(parse("a4 + a3'"), Rational(4), v, mu).verified());
}

TEST_CASE("absolute invariant checks") {
  VectorField v = induced_order5();
  RatFunc i1 = parse_rational("(-a4 + a3')^3/a3^4");
  CHECK(check_absolute(i1, v).verified());
  CHECK_FALSE(check_absolute(i1, builtin_generator_order5()).verified());
  CHECK_FALSE(check_absolute(parse_rational("(-a4 + a3')^3/a3^3"), v).verified());

  PowerProduct pp;
  pp.factors = {{"S1", parse("-a4 + a3'"), Rational(3), Rational(4)},
                {"S0", parse("a3"), Rational(-4), Rational(3)}};
  CHECK(pp.index() == 0);
  CHECK(check_absolute(pp, v).verified());
  PowerProduct root;
  root.factors = {{"S1", parse("-a4 + a3'"), Rational(3, 4), Rational(4)},
                  {"S0", parse("a3"), Rational(-1), Rational(3)}};
  CHECK_FALSE(root.integral());
  CHECK(check_absolute(root, v).verified());
  CHECK(check_relative(root, Rational(0), v, mu_order5()).verified());
}

TEST_CASE("index inference") {
  VectorField v = induced_order5();
  DiffPoly mu = mu_order5();
  CHECK(infer_index(parse("a3"), v, mu) == Rational(3));
  CHECK(infer_index(parse("3*a5*a3 - a4^2"), v, mu) == Rational(8));
  CHECK(infer_index(parse("a3^2*(-a4 + a3')"), v, mu) == Rational(10));
  CHECK_FALSE(infer_index(parse("a3 + a4"), v, mu).has_value());
  CHECK_FALSE(infer_index(parse("a4"), v, mu).has_value());
}

TEST_CASE("property: prolonged field commutes with D_x up to f'") {
  // [X, D_x] = -f' D_x on polynomials in x and the jets
  VectorField v = induced_order5();
  ProlongedField p(v, 4);
  const DiffPoly fp = total_derivative(v.f, Derivation::X);
  PolyGen gen(20240611, jet_pool(3));
  for (int i = 0; i < 100; ++i) {
    DiffPoly F = gen.poly();
    DiffPoly lhs = p.apply(total_derivative(F, Derivation::X)) -
                   total_derivative(p.apply(F), Derivation::X);
    CHECK(lhs == -(fp * total_derivative(F, Derivation::X)));
  }
}

TEST_CASE("property: X is a derivation and characters multiply") {
  VectorField v = induced_order5();
  ProlongedField p(v, 3);
  PolyGen gen(77, jet_pool(3));
  for (int i = 0; i < 100; ++i) {
    DiffPoly F = gen.poly(), G = gen.poly();
    CHECK(p.apply(F * G) == p.apply(F) * G + F * p.apply(G));
    CHECK(p.apply(F + G) == p.apply(F) + p.apply(G));
  }
  const DiffPoly mu = mu_order5();
  const std::vector<std::pair<DiffPoly, int>> known{
      {parse("a3"), 3}, {parse("-a4 + a3'"), 4}, {parse("3*a5*a3 - a4^2"), 8}};
  for (const auto& [f1, m1] : known) {
    for (const auto& [f2, m2] : known) {
      CHECK(check_relative(f1 * f2, Rational(m1 + m2), v, mu).verified());
      CHECK(infer_index(f1 * f2, v, mu) == Rational(m1 + m2));
    }
  }
}
