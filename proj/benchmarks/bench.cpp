#include <benchmark/benchmark.h>

#include "bipos/classical.hpp"
#include "bipos/exceptional.hpp"
#include "bipos/mspace.hpp"

using namespace bipos;

static void BM_BasisS5(benchmark::State& state) {
  auto g = Group::symmetric(5);
  for (auto _ : state) benchmark::DoNotOptimize(basis_beta(g));
}
BENCHMARK(BM_BasisS5)->Unit(benchmark::kMillisecond);

// Builds the full matrix for V_n; the F2 fast path keeps this cheap.
static void BM_FourierV(benchmark::State& state) {
  auto s = space_for("V" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FourierMatrix::build(s));
  state.SetComplexityN(s->size());
}
BENCHMARK(BM_FourierV)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_FourierApplyS5(benchmark::State& state) {
  auto s = space_for("S5");
  auto A = FourierMatrix::build(s);
  MVector v = MVector::parse(s, "(1,1)+(g5,z)+(g2',r)");
  for (auto _ : state) benchmark::DoNotOptimize(A.apply(v));
}
BENCHMARK(BM_FourierApplyS5);

// family_ff is memoized, so time the uncached z/B(k) work instead.
static void BM_ZofSweep(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  const auto& sd = classical::enumerate_family(classical::Family::S, d);
  for (auto _ : state)
    for (const auto& b : sd) benchmark::DoNotOptimize(classical::z_of(b, d));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sd.size()));
}
BENCHMARK(BM_ZofSweep)->DenseRange(4, 12, 4);

static void BM_BofK(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  const auto& sd = classical::enumerate_family(classical::Family::S, d);
  for (auto _ : state)
    for (const auto& b : sd)
      for (int k = 0; 2 * static_cast<int>(b.size()) + 2 * k <= d; ++k)
        benchmark::DoNotOptimize(classical::b_of_k(b, k, d));
}
BENCHMARK(BM_BofK)->Arg(8)->Arg(12);

static void BM_FamilyFF16(benchmark::State& state) {
  // first call fills the cache; report that cost once
  for (auto _ : state) benchmark::DoNotOptimize(classical::family_ff(16).size());
}
BENCHMARK(BM_FamilyFF16)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
