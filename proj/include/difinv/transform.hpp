#pragma once

#include <map>
#include <vector>

#include "difinv/invariant.hpp"
#include "difinv/rat_func.hpp"
#include "difinv/vector_field.hpp"

namespace difinv {

/// How y = eta(z) w is represented: free jets eta^(k), or the
/// canonical-form-preserving choice eta = c (xi')^((n-1)/2) (odd n only).
enum class EtaMode { General, Canonical };

inline constexpr int kMaxTransformOrder = 6;

/// Coefficients A_j of w^(n) + A_1 w^(n-1) + ... + A_n w = 0 obtained from
/// y^(n) + sum_{j in slots} a_j y^(n-j) = 0 under x = xi(z), y = eta(z) w.
/// A_j is a rational function of z-jets of xi and eta and of the composed
/// coefficients abar_j^(k) = a_j^(k)(xi(z)).
struct TransformedEquation {
  int n = 0;
  std::vector<int> slots;
  EtaMode eta = EtaMode::General;
  std::map<int, RatFunc> A;  // j = 1 .. n
};

/// Throws LimitError for n outside 1..kMaxTransformOrder and DomainError for
/// canonical eta with even n.
TransformedEquation transform_coefficients(int n, const std::vector<int>& slots,
                                           EtaMode eta = EtaMode::General);

/// {xi, z} = (xi' xi''' - 3/2 xi''^2) / xi'^2 in the jets of xi.
RatFunc schwarzian();
/// The Schwarzian of an explicit function g(z).
RatFunc schwarzian(const RatFunc& g);

/// Replaces xi^(k), k >= 3, by the values forced on Mobius maps,
/// xi^(k) = k!/2^(k-1) xi''^(k-1) / xi'^(k-2).
RatFunc mobius_reduce(const RatFunc& r);

/// Jets of an explicit function of z: xi^(k) -> D_z^k g for k <= order.
std::map<JetVar, RatFunc> xi_jets_of(const RatFunc& g, int order);

/// The Mobius map (alpha z + beta) / (gamma z + delta) with symbolic
/// parameters, and the translation z + beta.
RatFunc mobius_map();
RatFunc translation_map();

enum class Family { Mobius, Translation };

/// Outcome of comparing S(A, A', ...) with base^m S(abar, abar', ...) over a
/// canonical-form-preserving family. Both candidate bases are tested.
struct LawReport {
  Family family = Family::Mobius;
  Rational index;
  bool a1_vanishes = false;
  bool a2_vanishes = false;
  bool derivative_law = false;  // factor (dxi/dz)^m
  bool value_law = false;       // factor xi^m
  RatFunc derivative_residual;
  RatFunc value_residual;
};

/// Throws VerificationError when s does not verify under ctx.
LawReport verify_transformation_law(const Invariant& s, const GeneratorContext& ctx,
                                    Family family = Family::Mobius);

/// First-order expansion of the finite action along xi = z + eps f,
/// eta = 1 + eps (n-1)/2 f'. f is a polynomial of degree <= 2 in x whose
/// coefficients may involve parameters; ConfigError otherwise.
VectorField induced_generator(const DiffPoly& f, int n = 5, const std::vector<int>& slots = {3, 4, 5});

/// induced_generator(k1 + k2 x + k3 x^2).
VectorField induced_generator_order5();

}  // namespace difinv
