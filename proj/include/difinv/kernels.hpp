#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "difinv/diff_poly.hpp"
#include "difinv/execution.hpp"

namespace difinv {
class ProlongedField;
}

namespace difinv::kernels {

/// Product of two polynomials. The parallel path splits the larger operand's
/// terms across threads, accumulates per-thread partial products and merges.
DiffPoly multiply(const DiffPoly& a, const DiffPoly& b, Exec exec = Exec::Auto);

/// Term-pair count above which Exec::Auto multiplies in parallel.
inline constexpr std::size_t kParallelMultiplyThreshold = 1 << 14;

/// Ansatz columns: X(M_i) + weight * mu * M_i for every candidate monomial.
/// Columns are independent, so the parallel path distributes candidates.
std::vector<DiffPoly> ansatz_columns(const ProlongedField& field,
                                     const std::vector<Monomial>& candidates,
                                     const Rational& weight, const DiffPoly& mu,
                                     Exec exec = Exec::Auto);

/// Runs independent seeded trials (trial i must depend only on i).
/// Results are returned in trial order whatever the execution policy.
using Trial = std::function<std::optional<std::size_t>(std::size_t)>;
std::vector<std::optional<std::size_t>> run_trials(std::size_t trials, const Trial& trial,
                                                   Exec exec = Exec::Auto);

}  // namespace difinv::kernels
