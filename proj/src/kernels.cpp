#include "difinv/kernels.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace difinv {

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

void multiply_range(const DiffPoly& a, const DiffPoly& b, std::size_t begin, std::size_t end,
                    Accumulator& acc) {
  const auto& at = a.terms();
  for (std::size_t i = begin; i < end; ++i) {
    for (const auto& tb : b.terms()) {
      Monomial m = at[i].mono * tb.mono;
      auto [it, inserted] = acc.try_emplace(std::move(m), at[i].coeff * tb.coeff);
      if (!inserted) it->second += at[i].coeff * tb.coeff;
    }
  }
}

DiffPoly multiply_serial(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return DiffPoly();
  if (a.size() == 1 && a.leading().mono.is_one()) return b * a.leading().coeff;
  if (b.size() == 1 && b.leading().mono.is_one()) return a * b.leading().coeff;
  if (b.size() == 1) return (a * b.leading().mono) * b.leading().coeff;
  if (a.size() == 1) return (b * a.leading().mono) * a.leading().coeff;
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  multiply_range(a, b, 0, a.size(), acc);
  return DiffPoly::from_map(std::move(acc));
}

DiffPoly multiply_parallel(const DiffPoly& a, const DiffPoly& b) {
  const DiffPoly& outer = a.size() >= b.size() ? a : b;
  const DiffPoly& inner = a.size() >= b.size() ? b : a;
  const int threads = worker_threads();
  if (threads <= 1 || outer.size() < 2) return multiply_serial(a, b);

  std::vector<Accumulator> partial(static_cast<std::size_t>(threads));
  const std::size_t n = outer.size();
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t tid = 0;
#endif
    const std::size_t chunk = (n + partial.size() - 1) / partial.size();
    const std::size_t begin = std::min(n, tid * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    multiply_range(outer, inner, begin, end, partial[tid]);
  }
  Accumulator& acc = partial.front();
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [m, c] : partial[t]) {
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  }
  return DiffPoly::from_map(std::move(acc));
}

}  // namespace

DiffPoly multiply(const DiffPoly& a, const DiffPoly& b, Exec exec) {
  switch (exec) {
    case Exec::Serial:
      return multiply_serial(a, b);
    case Exec::Parallel:
      return multiply_parallel(a, b);
    case Exec::Auto:
      break;
  }
  if (a.size() * b.size() >= kParallelMultiplyThreshold && worker_threads() > 1) {
    return multiply_parallel(a, b);
  }
  return multiply_serial(a, b);
}

}  // namespace kernels
}  // namespace difinv

#include "difinv/vector_field.hpp"

namespace difinv::kernels {

std::vector<DiffPoly> ansatz_columns(const ProlongedField& field,
                                     const std::vector<Monomial>& candidates,
                                     const Rational& weight, const DiffPoly& mu, Exec exec) {
  const long n = static_cast<long>(candidates.size());
  std::vector<DiffPoly> columns(candidates.size());
  auto column = [&](long i) {
    DiffPoly m = DiffPoly::monomial(candidates[static_cast<std::size_t>(i)]);
    columns[static_cast<std::size_t>(i)] = field.apply(m) + (mu * m) * weight;
  };
  const bool parallel = exec == Exec::Parallel || (exec == Exec::Auto && worker_threads() > 1);
  if (!parallel) {
    for (long i = 0; i < n; ++i) column(i);
    return columns;
  }
  // Exceptions must not escape an OpenMP region; capture the first one.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      column(i);
    } catch (...) {
#pragma omp critical(difinv_ansatz_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return columns;
}

std::vector<std::optional<std::size_t>> run_trials(std::size_t trials, const Trial& trial,
                                                   Exec exec) {
  std::vector<std::optional<std::size_t>> out(trials);
  const long n = static_cast<long>(trials);
  const bool parallel = exec == Exec::Parallel || (exec == Exec::Auto && worker_threads() > 1);
  if (!parallel) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = trial(static_cast<std::size_t>(i));
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = trial(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(difinv_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace difinv::kernels
