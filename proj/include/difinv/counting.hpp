#pragma once

#include <cstdint>
#include <vector>

#include "difinv/execution.hpp"
#include "difinv/invariant.hpp"
#include "difinv/vector_field.hpp"

namespace difinv {

/// Seeded source of random rational points p/q with |p| <= radius and
/// 1 <= q <= 3. Variables listed in `nonzero` are redrawn until nonzero.
/// Trial i depends only on (seed, i).
struct PointSampler {
  std::uint64_t seed = 0;
  int radius = 6;
  std::vector<JetVar> nonzero{JetVar::coef(3)};

  Point sample(std::size_t trial, const std::vector<JetVar>& vars) const;
};

/// Maximum exact rank over seeded trials.
struct RankReport {
  std::size_t rank = 0;
  std::size_t points = 0;    // nonsingular points used
  std::size_t singular = 0;  // points rejected as singular
  std::size_t at_max = 0;    // points attaining the maximum
};

/// Number of absolute invariants of the p-th prolongation computed as
/// N - rank, where N counts {x} and the jets a_j^(k) (j in slots, k <= p)
/// and rank is the generic rank of the parameter components of v.
struct CountReport {
  int order = 0;
  std::size_t jet_variables = 0;
  RankReport rank;
  long count = 0;
  long formula = 0;  // n + 4 - p (n - 2)
  bool formula_agrees = false;
};

long gamma_formula(int n, int p);

CountReport invariant_count(const VectorField& v, int p, std::size_t trials,
                            const PointSampler& sampler = {}, Exec exec = Exec::Auto);

/// Generic rank of the Jacobian of the invariants with respect to every
/// variable they contain. Power products use the logarithmic Jacobian,
/// which has the same rank at points where every base is nonzero. Throws
/// SamplingError when every point is singular.
RankReport jacobian_rank(const std::vector<Invariant>& invs, std::size_t trials,
                         const PointSampler& sampler = {}, Exec exec = Exec::Auto);

}  // namespace difinv
