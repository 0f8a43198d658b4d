#include "difinv/ansatz.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "difinv/errors.hpp"
#include "difinv/kernels.hpp"
#include "difinv/linalg.hpp"

namespace difinv {

namespace {

void enumerate(const std::vector<JetVar>& jets, std::size_t i, int left,
               std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (left == 0) {
    out.push_back(Monomial::from_factors(current));
    return;
  }
  if (i == jets.size()) return;
  const int w = jets[i].index() + jets[i].order();
  for (unsigned e = 0; static_cast<int>(e) * w <= left; ++e) {
    if (e > 0) current.push_back({jets[i], e});
    enumerate(jets, i + 1, left - static_cast<int>(e) * w, current, out);
    if (e > 0) current.pop_back();
    if (out.size() > kMaxAnsatzMonomials) return;
  }
}

}  // namespace

std::vector<Monomial> weighted_monomials(int weight, const std::vector<int>& slots,
                                         int max_order) {
  if (weight < 0 || weight > kMaxAnsatzWeight) {
    throw LimitError("ansatz weight " + std::to_string(weight) + " outside [0, " +
                     std::to_string(kMaxAnsatzWeight) + "]");
  }
  if (max_order > max_jet_order()) {
    throw LimitError("ansatz order " + std::to_string(max_order) +
                     " exceeds the configured maximum jet order");
  }
  std::vector<JetVar> jets;
  for (int j : slots) {
    if (j <= 0) throw std::invalid_argument("coefficient slots start at 1");
    for (int k = 0; k <= max_order; ++k) jets.push_back(JetVar::coef(j, k));
  }
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  enumerate(jets, 0, weight, current, out);
  if (out.size() > kMaxAnsatzMonomials) {
    throw LimitError("ansatz space exceeds " + std::to_string(kMaxAnsatzMonomials) +
                     " monomials");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

AnsatzResult find_relative_invariants(int w, int r, const VectorField& v, const DiffPoly& mu,
                                      Exec exec,
                                      const std::optional<std::vector<Monomial>>& restrict_to) {
  AnsatzResult result;
  result.candidates = restrict_to ? *restrict_to : weighted_monomials(w, v.slots(), r);
  std::sort(result.candidates.begin(), result.candidates.end(), std::greater<>());
  if (result.candidates.size() > kMaxAnsatzMonomials) {
    throw LimitError("ansatz space exceeds " + std::to_string(kMaxAnsatzMonomials) +
                     " monomials");
  }
  if (result.candidates.empty()) return result;

  ProlongedField field(v, std::max(0, r));
  std::vector<DiffPoly> columns =
      kernels::ansatz_columns(field, result.candidates, Rational(w), mu, exec);

  // One equation per monomial in (x, parameters, jets), ordered canonically.
  std::vector<Monomial> row_monos;
  for (const auto& col : columns) {
    for (const auto& t : col.terms()) row_monos.push_back(t.mono);
  }
  std::sort(row_monos.begin(), row_monos.end(), std::greater<>());
  row_monos.erase(std::unique(row_monos.begin(), row_monos.end()), row_monos.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t i = 0; i < row_monos.size(); ++i) row_of.emplace(row_monos[i], i);

  std::vector<SparseRow> rows(row_monos.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : columns[c].terms()) rows[row_of.at(t.mono)].emplace(c, t.coeff);
  }
  result.equations = rows.size();

  RowEchelon ech(result.candidates.size());
  for (auto& row : rows) ech.add_row(std::move(row));
  result.rank = ech.rank();

  for (auto& vec : ech.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i] != 0) terms.push_back({result.candidates[i], vec[i]});
    }
    result.basis.push_back(primitive(DiffPoly::from_terms(std::move(terms))));
  }
  return result;
}

}  // namespace difinv
