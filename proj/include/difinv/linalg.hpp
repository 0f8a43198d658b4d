#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "difinv/rational.hpp"

namespace difinv {

using SparseRow = std::map<std::size_t, Rational>;

/// Incremental exact Gaussian elimination over Q. Rows are reduced against
/// the pivots collected so far; independent rows become new pivots.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  /// Returns true when the row was independent of the previous ones.
  bool add_row(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

  /// Basis of {c : A c = 0}, one vector per free column in increasing column
  /// order, from the reduced row echelon form.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  void reduce(SparseRow& row) const;

  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1
};

/// Exact rank of a dense matrix.
std::size_t rank(const std::vector<std::vector<Rational>>& matrix);

/// Scales to coprime integers with the first nonzero entry positive.
std::vector<Rational> primitive_vector(std::vector<Rational> v);

}  // namespace difinv
