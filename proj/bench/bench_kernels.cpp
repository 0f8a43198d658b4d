// Serial reference vs OpenMP path for the three parallel kernels.
#include <benchmark/benchmark.h>

#include "difinv/ansatz.hpp"
#include "difinv/catalog.hpp"
#include "difinv/counting.hpp"
#include "difinv/halphen.hpp"
#include "difinv/kernels.hpp"
#include "difinv/syntax.hpp"

using namespace difinv;

namespace {

Exec policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_Multiply(benchmark::State& state) {
  const DiffPoly p = pow(parse("a3 + a4' + a5'' + a3^(3) + x*a4 + k2*a5' + 1"), 6);
  const DiffPoly q = pow(parse("a4 - a3' + a5*a3 + a4'' - 2"), 6);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(p, q, policy(state)));
  label(state);
}

void BM_AnsatzColumns(benchmark::State& state) {
  const GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  const auto candidates = weighted_monomials(20, {3, 4, 5}, 3);
  const ProlongedField field = prolong(ctx.field, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::ansatz_columns(field, candidates, Rational(20), ctx.mu, policy(state)));
  }
  state.counters["columns"] = static_cast<double>(candidates.size());
  label(state);
}

void BM_RankTrials(benchmark::State& state) {
  const GeneratorContext ctx = order5_context(GeneratorChoice::Induced);
  const auto set = fundamental_set(3, verified_seeds(GeneratorChoice::Induced), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_rank(set, 40, {}, policy(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnsatzColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
