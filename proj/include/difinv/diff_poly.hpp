#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "difinv/jet_var.hpp"
#include "difinv/rational.hpp"

namespace difinv {

/// The two total derivations of the ring. D_x acts on x and the a_j jets,
/// D_z on z and the transformation jets (xi, eta, composed coefficients).
enum class Derivation { X, Z };

/// Highest jet order any derivation may produce (default 12).
int max_jet_order();
void set_max_jet_order(int order);

/// Restores the previous jet-order limit on scope exit.
class JetOrderLimitGuard {
 public:
  explicit JetOrderLimitGuard(int order) : saved_(max_jet_order()) {
    set_max_jet_order(order);
  }
  ~JetOrderLimitGuard() { set_max_jet_order(saved_); }
  JetOrderLimitGuard(const JetOrderLimitGuard&) = delete;
  JetOrderLimitGuard& operator=(const JetOrderLimitGuard&) = delete;

 private:
  int saved_;
};

class Monomial {
 public:
  struct Factor {
    JetVar var;
    unsigned exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(JetVar var, unsigned exp = 1);

  /// Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(JetVar var) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& rhs) const;
  std::optional<Monomial> divide(const Monomial& divisor) const;
  /// Exponent of `var` lowered by one; `var` must be present.
  Monomial lowered(JetVar var) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  /// Graded lexicographic order over the fixed JetVar order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;  // ascending by variable
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in jet variables with exact rational coefficients. Terms are
/// kept unique, nonzero and sorted by decreasing monomial order, so equality
/// is structural.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static DiffPoly var(JetVar v, unsigned exp = 1);
  static DiffPoly monomial(Monomial mono, Rational coeff = 1);
  static DiffPoly from_terms(std::vector<Term> terms);
  /// Takes ownership of an accumulator; zero entries are dropped.
  static DiffPoly from_map(std::unordered_map<Monomial, Rational, MonomialHash>&& acc);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;
  const Term& leading() const { return terms_.front(); }

  /// Coefficient of an exact monomial (0 when absent).
  Rational coefficient(const Monomial& mono) const;

  std::set<JetVar> variables() const;
  bool contains(VarKind kind) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& rhs);
  DiffPoly& operator-=(const DiffPoly& rhs);
  DiffPoly& operator*=(const Rational& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator*(const DiffPoly& a, const Monomial& m);

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  std::vector<Term> terms_;
};

DiffPoly pow(const DiffPoly& base, unsigned exponent);

/// D_x or D_z with the Leibniz rule. Throws DomainError when a variable does
/// not belong to the derivation and LimitError past max_jet_order().
DiffPoly total_derivative(const DiffPoly& p, Derivation d);

/// Image of a single variable under a derivation.
DiffPoly derivative_of_var(JetVar v, Derivation d);

DiffPoly partial_derivative(const DiffPoly& p, JetVar v);

struct Weight {
  enum class Status { Isobaric, NotIsobaric, Undefined };
  Status status;
  int value = 0;

  bool isobaric() const { return status == Status::Isobaric; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Weight grading a_j^(k) -> j+k. Undefined for the zero polynomial and for
/// anything containing a variable other than coefficient jets.
Weight weight(const DiffPoly& p);

using Point = std::unordered_map<JetVar, Rational>;

/// Throws DomainError on an unassigned variable.
Rational evaluate(const DiffPoly& p, const Point& point);

/// Largest k over Coef(., k); -1 when no coefficient jet appears.
int max_order(const DiffPoly& p);
/// Largest jet order over variables of the given jet kind; -1 when absent.
int max_order(const DiffPoly& p, VarKind kind);

/// Drops every term whose degree in `var` exceeds `max_degree`.
struct Truncation {
  JetVar var;
  unsigned max_degree;
};
DiffPoly truncate(const DiffPoly& p, const Truncation& t);

/// Simultaneous substitution of variables by polynomials.
DiffPoly substitute(const DiffPoly& p, const std::map<JetVar, DiffPoly>& values,
                    std::optional<Truncation> truncation = std::nullopt);

/// Coefficient of var^degree, viewing p as a polynomial in var.
DiffPoly coefficient_in(const DiffPoly& p, JetVar var, unsigned degree);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const DiffPoly& p);

/// Integer, content-free, leading coefficient positive.
DiffPoly primitive(const DiffPoly& p);

/// Largest monomial dividing every term (1 for the zero polynomial).
Monomial monomial_content(const DiffPoly& p);

/// Quotient when q divides p exactly; nullopt otherwise. q must be nonzero.
std::optional<DiffPoly> divide_exact(const DiffPoly& p, const DiffPoly& q);

}  // namespace difinv
