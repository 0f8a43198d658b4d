#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "difinv/diff_poly.hpp"
#include "difinv/invariant.hpp"
#include "difinv/rat_func.hpp"

namespace difinv {

/// Infinitesimal generator f d/dx + sum_j phi_j d/da_j of the equivalence
/// group acting on the coefficients of y^(n) + sum_j a_j y^(n-j) = 0.
struct VectorField {
  DiffPoly f;
  std::map<int, DiffPoly> phis;  // slot j -> phi_j
  int n = 0;

  std::vector<int> slots() const;

  /// Throws ConfigError unless f and every phi_j only involve x, parameters
  /// and order-0 coefficients.
  void validate() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// The generator of the order-5 canonical form y^(5) + a3 y'' + a4 y' + a5 y
/// exactly as printed, with k1, k2, k3 as parameters.
VectorField builtin_generator_order5();

/// Prolongation to jet order p. All zeta(j, k), k <= p, are computed on
/// construction, so a ProlongedField is immutable and freely shareable.
class ProlongedField {
 public:
  /// Throws LimitError when p exceeds max_jet_order().
  ProlongedField(VectorField base, int order);

  const VectorField& base() const { return base_; }
  int order() const { return order_; }

  /// zeta(j,0) = phi_j; zeta(j,k) = D_x zeta(j,k-1) - a_j^(k) D_x f.
  const DiffPoly& zeta(int j, int k) const;

  /// f dF/dx + sum zeta(j,k) dF/da_j^(k). Throws DomainError when F needs a
  /// higher prolongation or mentions a coefficient outside the slots.
  DiffPoly apply(const DiffPoly& F) const;
  RatFunc apply(const RatFunc& F) const;

 private:
  VectorField base_;
  int order_;
  std::map<std::pair<int, int>, DiffPoly> zetas_;
};

ProlongedField prolong(const VectorField& v, int order);

/// Applies v prolonged to exactly the order F needs.
DiffPoly apply(const VectorField& v, const DiffPoly& F);
RatFunc apply(const VectorField& v, const RatFunc& F);

/// Normalized multiplier mu = -(X S0) / (sigma S0), sigma = weight(S0).
/// Throws ConfigError when it is not a polynomial.
DiffPoly multiplier(const VectorField& v, const DiffPoly& s0);

/// A generator with its fundamental relative invariant and the multiplier
/// read off from it.
struct GeneratorContext {
  VectorField field;
  DiffPoly s0;
  DiffPoly mu;
};

GeneratorContext make_context(VectorField v, DiffPoly s0);

/// Outcome of an infinitesimal invariance test: the residual is the exact
/// polynomial certificate, zero iff verified.
struct Verdict {
  DiffPoly residual;
  bool verified() const { return residual.is_zero(); }
};

/// X F + m mu F == 0 identically in x and the parameters.
Verdict check_relative(const DiffPoly& F, const Rational& m, const VectorField& v,
                       const DiffPoly& mu);

/// X F == 0; the residual is the numerator of X F.
Verdict check_absolute(const RatFunc& F, const VectorField& v);

/// Power products are tested through the logarithmic derivative, so no
/// power is ever expanded: sum e_i X(P_i) prod_{l != i} P_l + m mu prod P_l.
Verdict check_relative(const PowerProduct& F, const Rational& m, const VectorField& v,
                       const DiffPoly& mu);
Verdict check_absolute(const PowerProduct& F, const VectorField& v);

/// Dispatches on the record's kind and expression type.
Verdict check(const Invariant& inv, const VectorField& v, const DiffPoly& mu);

/// The unique m with X F + m mu F = 0, or nullopt when F is not a relative
/// invariant. F must be nonzero.
std::optional<Rational> infer_index(const DiffPoly& F, const VectorField& v, const DiffPoly& mu);

}  // namespace difinv
