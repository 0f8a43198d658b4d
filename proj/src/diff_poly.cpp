#include "difinv/diff_poly.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "difinv/errors.hpp"
#include "difinv/kernels.hpp"

namespace difinv {

namespace {

std::atomic<int> g_max_jet_order{12};

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

void accumulate(Accumulator& acc, const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

}  // namespace

int max_jet_order() { return g_max_jet_order.load(std::memory_order_relaxed); }

void set_max_jet_order(int order) {
  if (order < 0 || order > JetVar::kMaxJetOrder) {
    throw std::invalid_argument("jet order limit out of range");
  }
  g_max_jet_order.store(order, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(JetVar var, unsigned exp) {
  if (exp > 0) {
    factors_.push_back({var, exp});
    degree_ = exp;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

unsigned Monomial::exponent(JetVar var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, JetVar v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() && b != rhs.factors_.end()) {
    if (a->var < b->var) {
      out.factors_.push_back(*a++);
    } else if (b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, rhs.factors_.end());
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& d : divisor.factors_) {
    while (a != factors_.end() && a->var < d.var) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->var != d.var || a->exp < d.exp) return std::nullopt;
    if (a->exp > d.exp) out.factors_.push_back({a->var, a->exp - d.exp});
    ++a;
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lowered(JetVar var) const {
  Monomial out = *this;
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
    if (it->var == var) {
      if (--it->exp == 0) out.factors_.erase(it);
      --out.degree_;
      return out;
    }
  }
  throw std::logic_error("lowered: variable not present");
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var < j->var) {
      ++i;
    } else if (j->var < i->var) {
      ++j;
    } else {
      unsigned e = std::min(i->exp, j->exp);
      out.factors_.push_back({i->var, e});
      out.degree_ += e;
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  auto g = gcd(a, b);
  return *((a * b).divide(g));
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& f : factors_) {
    std::size_t x = (static_cast<std::size_t>(f.var.key()) << 16) ^ f.exp;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto i = a.factors_.rbegin();
  auto j = b.factors_.rbegin();
  for (; i != a.factors_.rend() && j != b.factors_.rend(); ++i, ++j) {
    if (auto c = i->var <=> j->var; c != 0) return c;
    if (auto c = i->exp <=> j->exp; c != 0) return c;
  }
  if (i != a.factors_.rend()) return std::strong_ordering::greater;
  if (j != b.factors_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

DiffPoly DiffPoly::var(JetVar v, unsigned exp) {
  DiffPoly p;
  p.terms_.push_back({Monomial(v, exp), Rational(1)});
  return p;
}

DiffPoly DiffPoly::monomial(Monomial mono, Rational coeff) {
  DiffPoly p;
  if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
  return p;
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  DiffPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

DiffPoly DiffPoly::from_map(std::unordered_map<Monomial, Rational, MonomialHash>&& acc) {
  DiffPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  return p;
}

std::optional<Rational> DiffPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().mono.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

Rational DiffPoly::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return t.mono > m; });
  return (it != terms_.end() && it->mono == mono) ? it->coeff : Rational(0);
}

std::set<JetVar> DiffPoly::variables() const {
  std::set<JetVar> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.insert(f.var);
  }
  return vars;
}

bool DiffPoly::contains(VarKind kind) const {
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) {
      if (f.var.kind() == kind) return true;
    }
  }
  return false;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    auto c = a->mono <=> b->mono;
    if (c > 0) {
      merged.push_back(std::move(*a++));
    } else if (c < 0) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) merged.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  std::move(a, terms_.end(), std::back_inserter(merged));
  merged.insert(merged.end(), b, rhs.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& rhs) { return *this += -rhs; }

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  return kernels::multiply(a, b);
}

DiffPoly operator*(const DiffPoly& a, const Monomial& m) {
  DiffPoly p;
  p.terms_.reserve(a.terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const auto& t : a.terms_) p.terms_.push_back({t.mono * m, t.coeff});
  return p;
}

DiffPoly pow(const DiffPoly& base, unsigned exponent) {
  DiffPoly result(1);
  DiffPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Derivations

DiffPoly derivative_of_var(JetVar v, Derivation d) {
  auto raise = [](JetVar var) {
    int k = var.order() + 1;
    if (k > max_jet_order()) {
      throw LimitError("jet order " + std::to_string(k) + " exceeds the configured maximum " +
                       std::to_string(max_jet_order()) + " (" + var.name() + ")");
    }
    return var.with_order(k);
  };
  auto reject = [&](JetVar var) -> DiffPoly {
    throw DomainError("variable " + var.name() + " is not compatible with the " +
                      std::string(d == Derivation::X ? "x" : "z") + "-derivation");
  };

  switch (v.kind()) {
    case VarKind::Param:
      return DiffPoly();
    case VarKind::Indep:
      return d == Derivation::X ? DiffPoly(1) : reject(v);
    case VarKind::Coef:
      return d == Derivation::X ? DiffPoly::var(raise(v)) : reject(v);
    case VarKind::Z:
      return d == Derivation::Z ? DiffPoly(1) : reject(v);
    case VarKind::XiJet:
    case VarKind::EtaJet:
      return d == Derivation::Z ? DiffPoly::var(raise(v)) : reject(v);
    case VarKind::CompCoef:
      if (d != Derivation::Z) return reject(v);
      // d/dz a_j^(k)(xi(z)) = xi' * a_j^(k+1)(xi(z))
      return DiffPoly::monomial(Monomial::from_factors({{JetVar::xi(1), 1}, {raise(v), 1}}));
  }
  return reject(v);
}

DiffPoly total_derivative(const DiffPoly& p, Derivation d) {
  Accumulator acc;
  std::unordered_map<JetVar, DiffPoly> images;
  for (const auto& t : p.terms()) {
    for (const auto& f : t.mono.factors()) {
      auto it = images.find(f.var);
      if (it == images.end()) it = images.emplace(f.var, derivative_of_var(f.var, d)).first;
      if (it->second.is_zero()) continue;
      Monomial rest = t.mono.lowered(f.var);
      Rational c = t.coeff * f.exp;
      for (const auto& u : it->second.terms()) accumulate(acc, rest * u.mono, c * u.coeff);
    }
  }
  return DiffPoly::from_map(std::move(acc));
}

DiffPoly partial_derivative(const DiffPoly& p, JetVar v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back({t.mono.lowered(v), t.coeff * e});
  }
  return DiffPoly::from_terms(std::move(out));
}

Weight weight(const DiffPoly& p) {
  if (p.is_zero()) return {Weight::Status::Undefined};
  std::optional<int> common;
  bool isobaric = true;
  for (const auto& t : p.terms()) {
    int w = 0;
    for (const auto& f : t.mono.factors()) {
      if (f.var.kind() != VarKind::Coef) return {Weight::Status::Undefined};
      w += (f.var.index() + f.var.order()) * static_cast<int>(f.exp);
    }
    if (!common) {
      common = w;
    } else if (*common != w) {
      isobaric = false;
    }
  }
  if (!isobaric) return {Weight::Status::NotIsobaric};
  return {Weight::Status::Isobaric, *common};
}

Rational evaluate(const DiffPoly& p, const Point& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = point.find(f.var);
      if (it == point.end()) throw DomainError("unassigned variable " + f.var.name());
      prod *= pow(it->second, static_cast<long>(f.exp));
    }
    sum += prod;
  }
  return sum;
}

int max_order(const DiffPoly& p) { return max_order(p, VarKind::Coef); }

int max_order(const DiffPoly& p, VarKind kind) {
  int best = -1;
  for (const auto& t : p.terms()) {
    for (const auto& f : t.mono.factors()) {
      if (f.var.kind() == kind) best = std::max(best, f.var.order());
    }
  }
  return best;
}

DiffPoly truncate(const DiffPoly& p, const Truncation& t) {
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    if (term.mono.exponent(t.var) <= t.max_degree) out.push_back(term);
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly substitute(const DiffPoly& p, const std::map<JetVar, DiffPoly>& values,
                    std::optional<Truncation> truncation) {
  auto mul = [&](const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a * b;
    return truncation ? truncate(r, *truncation) : r;
  };
  std::map<std::pair<JetVar, unsigned>, DiffPoly> powers;
  auto power_of = [&](const DiffPoly& base, JetVar v, unsigned e) -> const DiffPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    DiffPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = mul(r, base);
    return powers.emplace(key, std::move(r)).first->second;
  };

  Accumulator acc;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> kept;
    DiffPoly product(t.coeff);
    for (const auto& f : t.mono.factors()) {
      auto it = values.find(f.var);
      if (it == values.end()) {
        kept.push_back(f);
      } else {
        product = mul(product, power_of(it->second, f.var, f.exp));
      }
    }
    Monomial rest = Monomial::from_factors(std::move(kept));
    for (const auto& u : product.terms()) accumulate(acc, u.mono * rest, u.coeff);
  }
  DiffPoly result = DiffPoly::from_map(std::move(acc));
  return truncation ? truncate(result, *truncation) : result;
}

DiffPoly coefficient_in(const DiffPoly& p, JetVar var, unsigned degree) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(var);
    if (e != degree) continue;
    Monomial m = t.mono;
    for (unsigned i = 0; i < e; ++i) m = m.lowered(var);
    out.push_back({std::move(m), t.coeff});
  }
  return DiffPoly::from_terms(std::move(out));
}

Rational content(const DiffPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

DiffPoly primitive(const DiffPoly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading().coeff < 0) c = -c;
  return p * (Rational(1) / c);
}

Monomial monomial_content(const DiffPoly& p) {
  if (p.is_zero()) return Monomial();
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

std::optional<DiffPoly> divide_exact(const DiffPoly& p, const DiffPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = q.leading();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto m = t.mono.divide(lead.mono);
      if (!m) return std::nullopt;
      out.push_back({std::move(*m), t.coeff / lead.coeff});
    }
    return DiffPoly::from_terms(std::move(out));
  }
  DiffPoly remainder = p;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading();
    auto m = r.mono.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = r.coeff / lead.coeff;
    remainder -= (q * *m) * c;
    quotient.push_back({std::move(*m), std::move(c)});
  }
  return DiffPoly::from_terms(std::move(quotient));
}

}  // namespace difinv
