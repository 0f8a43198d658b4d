#pragma once

#include <optional>
#include <vector>

#include "difinv/invariant.hpp"
#include "difinv/vector_field.hpp"

namespace difinv {

/// phi(R1, R2) = m1 R1 R2' - m2 R2 R1', a relative invariant of index
/// m1 + m2 + 1. Throws DomainError unless both inputs are relative
/// polynomial invariants.
Invariant phi(const Invariant& r1, const Invariant& r2);

/// [phi(R1, R2)]^m2 / R2^(m1 + m2 + 1), kept as a power product.
Invariant chi(const Invariant& r1, const Invariant& r2);

/// R1^m2 / R2^m1.
Invariant chi0(const Invariant& r1, const Invariant& r2);

/// Halphen iterates phi_1 .. phi_q of s against the fixed invariant `base`
/// (index sigma): phi_q = theta(q-1) phi_{q-1} base' - sigma base phi_{q-1}',
/// theta(q) = m + q (sigma + 1).
std::vector<Invariant> phi_seq(const Invariant& s, int q, const Invariant& base);

/// chi_q = phi_q^sigma / base^theta(q) for q = 1 .. q.
std::vector<Invariant> chi_seq(const Invariant& s, int q, const Invariant& base);

Rational theta(const Rational& m, const Rational& sigma, int q);

/// S1^a / S2^b with the smallest positive integers a, b such that the index
/// cancels (a m = b k). Expanded to a rational function.
Invariant quotient_absolute(const Invariant& s1, const Invariant& s2);

/// s^e as a power product of index e m.
Invariant power_of(const Invariant& s, const Rational& e);

/// The relative invariants every construction starts from.
struct Seeds {
  Invariant s0, r0, s1, s2, s3;
};

/// I0 and chi_k(S_j), j = 1, 2, 3, k = 0 .. p-1, each verified under ctx.
/// Throws VerificationError with the residual when one fails.
std::vector<Invariant> fundamental_set(int p, const Seeds& seeds, const GeneratorContext& ctx);

struct RelativeSet {
  std::vector<Invariant> sequence;  // phi_k(S_j,S0), phi_k(R0,S0), phi_k(S0,R0)
  std::vector<Invariant> common;    // S^(m / index(S)) for the requested m
};

/// phi_k(S_j, S0), j = 1..3, k = 0, 1 and phi_k(R0, S0), phi_k(S0, R0),
/// k = 0..2, each verified; with `common_index`, also the power products of
/// every seed raised to that index.
RelativeSet relative_set(const Seeds& seeds, const GeneratorContext& ctx,
                         std::optional<Rational> common_index = std::nullopt);

/// D_x(I) / D_x(I0), verified absolute under ctx. Throws DomainError when I0
/// is constant and VerificationError when the result is not invariant.
Invariant invariant_derivative(const Invariant& i, const Invariant& i0, const GeneratorContext& ctx);

/// The closed form of D_x(I)/D_x(I0) for I = c S^e / S0^d, I0 = c0 R0^e0 /
/// S0^d0: (e/e0) (I/I0) (R0/S) (m S S0' - sigma S0 S') / (k R0 S0' - sigma S0 R0').
struct ClosedForm {
  RatFunc derivative;
  RatFunc closed;
  Rational factor;  // e / e0; the classical formula assumes 1
  bool holds = false;
};

ClosedForm derivative_closed_form(const Invariant& i, const Invariant& s, const Invariant& i0,
                                  const Invariant& r0, const Invariant& s0);

/// Largest c with p = c q, if p is a scalar multiple of q.
std::optional<Rational> scalar_multiple(const DiffPoly& p, const DiffPoly& q);

}  // namespace difinv
