#pragma once

#include <map>

#include "difinv/diff_poly.hpp"

namespace difinv {

/// Quotient of two differential polynomials.
///
/// Normal form: the denominator is nonzero, integer and content-free with a
/// positive leading coefficient; common monomial factors are cancelled, and
/// an exact polynomial quotient is taken when the denominator divides the
/// numerator. No multivariate GCD is attempted, so two equal functions may
/// have different representatives; operator== compares by cross
/// multiplication.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  explicit RatFunc(DiffPoly num);
  RatFunc(const Rational& c) : RatFunc(DiffPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(DiffPoly(c)) {}             // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(DiffPoly(c)) {}              // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den is zero.
  RatFunc(DiffPoly num, DiffPoly den);

  const DiffPoly& num() const { return num_; }
  const DiffPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.as_constant().has_value(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DomainError when b is the zero function.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  /// Exact equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Same representative (numerator and denominator identical).
  bool same_form(const RatFunc& other) const { return num_ == other.num_ && den_ == other.den_; }

 private:
  struct Normalized {};
  RatFunc(DiffPoly num, DiffPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  DiffPoly num_;
  DiffPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

RatFunc pow(const RatFunc& base, int exponent);

/// Quotient rule under the chosen derivation.
RatFunc rat_derivative(const RatFunc& r, Derivation d);

RatFunc partial_derivative(const RatFunc& r, JetVar v);

/// Throws DomainError when the denominator vanishes at the point.
Rational evaluate(const RatFunc& r, const Point& point);

int max_order(const RatFunc& r);

/// Substitutes variables by rational functions.
RatFunc substitute_rational(const DiffPoly& p, const std::map<JetVar, RatFunc>& values);
RatFunc substitute_rational(const RatFunc& r, const std::map<JetVar, RatFunc>& values);

}  // namespace difinv
