#include "difinv/linalg.hpp"

#include <stdexcept>

namespace difinv {

void RowEchelon::reduce(SparseRow& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    for (const auto& [c, value] : piv->second) {
      auto [slot, inserted] = row.try_emplace(c, -factor * value);
      if (!inserted) {
        slot->second -= factor * value;
        if (slot->second == 0) row.erase(slot);
      }
    }
    it = row.upper_bound(col);
  }
}

bool RowEchelon::add_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= columns_) throw std::out_of_range("row entry beyond column count");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  reduce(row);
  if (row.empty()) return false;
  const std::size_t col = row.begin()->first;
  const Rational inv = Rational(1) / row.begin()->second;
  for (auto& [c, value] : row) value *= inv;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> RowEchelon::nullspace() const {
  // Back-substitute to the reduced form: clear each pivot column from the
  // rows above it, working from the last pivot upward.
  std::map<std::size_t, SparseRow> reduced = pivots_;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    const std::size_t col = it->first;
    const SparseRow& prow = it->second;
    for (auto& [other_col, other] : reduced) {
      if (other_col >= col) break;
      auto entry = other.find(col);
      if (entry == other.end()) continue;
      const Rational factor = entry->second;
      for (const auto& [c, value] : prow) {
        auto [slot, inserted] = other.try_emplace(c, -factor * value);
        if (!inserted) {
          slot->second -= factor * value;
          if (slot->second == 0) other.erase(slot);
        }
      }
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (reduced.count(free)) continue;
    std::vector<Rational> v(columns_, Rational(0));
    v[free] = 1;
    for (const auto& [pc, prow] : reduced) {
      auto entry = prow.find(free);
      if (entry != prow.end()) v[pc] = -entry->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.empty()) return 0;
  RowEchelon ech(matrix.front().size());
  for (const auto& r : matrix) {
    SparseRow row;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) row.emplace(c, r[c]);
    }
    ech.add_row(std::move(row));
  }
  return ech.rank();
}

std::vector<Rational> primitive_vector(std::vector<Rational> v) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  const Rational* first = nullptr;
  for (const auto& q : v) {
    if (q == 0) continue;
    if (!first) first = &q;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!first) return v;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (*first < 0) scale = -scale;
  for (auto& q : v) q *= scale;
  return v;
}

}  // namespace difinv
