#include "difinv/rat_func.hpp"

#include <algorithm>

#include "difinv/errors.hpp"

namespace difinv {

namespace {

// Exact division is attempted only for denominators of modest size.
constexpr std::size_t kDivisionAttemptLimit = 64;

bool is_single_term(const DiffPoly& p) { return p.size() == 1; }

}  // namespace

RatFunc::RatFunc(DiffPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(DiffPoly num, DiffPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = DiffPoly(1);
    return;
  }
  Monomial g = Monomial::gcd(monomial_content(num_), monomial_content(den_));
  if (!g.is_one()) {
    num_ = *divide_exact(num_, DiffPoly::monomial(g));
    den_ = *divide_exact(den_, DiffPoly::monomial(g));
  }
  if (auto c = den_.as_constant()) {
    num_ *= Rational(1) / *c;
    den_ = DiffPoly(1);
    return;
  }
  if (den_.size() <= kDivisionAttemptLimit && num_.size() >= den_.size()) {
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = DiffPoly(1);
      return;
    }
  }
  Rational c = content(den_);
  if (den_.leading().coeff < 0) c = -c;
  if (c != 1) {
    Rational inv = Rational(1) / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (is_single_term(a.den_) && is_single_term(b.den_)) {
    const Term& da = a.den_.leading();
    const Term& db = b.den_.leading();
    Monomial l = Monomial::lcm(da.mono, db.mono);
    DiffPoly na = (a.num_ * *l.divide(da.mono)) * (Rational(1) / da.coeff);
    DiffPoly nb = (b.num_ * *l.divide(db.mono)) * (Rational(1) / db.coeff);
    return RatFunc(na + nb, DiffPoly::monomial(l));
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFunc(a.num_ * b.num_, DiffPoly(1), RatFunc::Normalized{});
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc pow(const RatFunc& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero function to a negative power");
    return RatFunc(pow(base.den(), static_cast<unsigned>(-exponent)),
                   pow(base.num(), static_cast<unsigned>(-exponent)));
  }
  if (base.is_polynomial()) return RatFunc(pow(base.num(), static_cast<unsigned>(exponent)));
  return RatFunc(pow(base.num(), static_cast<unsigned>(exponent)),
                 pow(base.den(), static_cast<unsigned>(exponent)));
}

RatFunc rat_derivative(const RatFunc& r, Derivation d) {
  DiffPoly dn = total_derivative(r.num(), d);
  if (r.is_polynomial()) return RatFunc(dn * (Rational(1) / *r.den().as_constant()));
  DiffPoly dd = total_derivative(r.den(), d);
  return RatFunc(dn * r.den() - r.num() * dd, r.den() * r.den());
}

RatFunc partial_derivative(const RatFunc& r, JetVar v) {
  DiffPoly dn = partial_derivative(r.num(), v);
  if (r.is_polynomial()) return RatFunc(dn * (Rational(1) / *r.den().as_constant()));
  DiffPoly dd = partial_derivative(r.den(), v);
  return RatFunc(dn * r.den() - r.num() * dd, r.den() * r.den());
}

Rational evaluate(const RatFunc& r, const Point& point) {
  Rational d = evaluate(r.den(), point);
  if (d == 0) throw DomainError("denominator vanishes at the evaluation point");
  return evaluate(r.num(), point) / d;
}

int max_order(const RatFunc& r) { return std::max(max_order(r.num()), max_order(r.den())); }

RatFunc substitute_rational(const DiffPoly& p, const std::map<JetVar, RatFunc>& values) {
  // Collect terms with equal denominators before adding.
  std::map<std::pair<JetVar, unsigned>, RatFunc> powers;
  auto power_of = [&](JetVar v, unsigned e) -> const RatFunc& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, pow(values.at(v), static_cast<int>(e))).first->second;
  };
  RatFunc sum;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> kept;
    RatFunc product(DiffPoly(t.coeff));
    for (const auto& f : t.mono.factors()) {
      if (values.count(f.var)) {
        product = product * power_of(f.var, f.exp);
      } else {
        kept.push_back(f);
      }
    }
    product = product * RatFunc(DiffPoly::monomial(Monomial::from_factors(std::move(kept))));
    sum = sum + product;
  }
  return sum;
}

RatFunc substitute_rational(const RatFunc& r, const std::map<JetVar, RatFunc>& values) {
  return substitute_rational(r.num(), values) / substitute_rational(r.den(), values);
}

}  // namespace difinv
