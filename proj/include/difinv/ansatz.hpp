#pragma once

#include <optional>
#include <vector>

#include "difinv/execution.hpp"
#include "difinv/vector_field.hpp"

namespace difinv {

/// Candidate monomials of exactly the given weight in a_j^(k), j in slots,
/// k <= max_order, sorted by decreasing monomial order.
std::vector<Monomial> weighted_monomials(int weight, const std::vector<int>& slots,
                                         int max_order);

inline constexpr std::size_t kMaxAnsatzMonomials = 5000;
inline constexpr int kMaxAnsatzWeight = 64;

struct AnsatzResult {
  std::vector<Monomial> candidates;
  std::size_t equations = 0;  // distinct monomials in x, parameters and jets
  std::size_t rank = 0;
  /// Integer, content-free basis with positive leading coefficient.
  std::vector<DiffPoly> basis;
};

/// Relative invariants of weight w and order <= r as the null space of the
/// linear system X(sum c_i M_i) + w mu (sum c_i M_i) = 0, read as an
/// identity in x and the parameters. The index of each basis element equals
/// its weight. `restrict_to` replaces the full candidate list by a subset.
/// Throws LimitError past kMaxAnsatzWeight / kMaxAnsatzMonomials.
AnsatzResult find_relative_invariants(int w, int r, const VectorField& v, const DiffPoly& mu,
                                      Exec exec = Exec::Auto,
                                      const std::optional<std::vector<Monomial>>& restrict_to =
                                          std::nullopt);

}  // namespace difinv
