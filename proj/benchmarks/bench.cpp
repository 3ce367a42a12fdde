#include <benchmark/benchmark.h>

#include <random>

#include "rmlogic/clone.hpp"
#include "rmlogic/enumerate.hpp"
#include "rmlogic/semantics.hpp"

using namespace rmlogic;

namespace {

Formula sample_formula(int m) {
  std::mt19937_64 rng(42);
  return random_formula(rng, FormulaAlphabet::sugared(m), 40);
}

// Plane-wise table against per-valuation recursion.
void BM_TablePacked(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Formula f = sample_formula(m);
  for (auto _ : state) benchmark::DoNotOptimize(table(f, m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pow3(m)));
}
BENCHMARK(BM_TablePacked)->DenseRange(4, 10, 2);

void BM_TableScalar(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Formula f = sample_formula(m);
  const std::uint64_t n = pow3(m);
  for (auto _ : state) {
    int acc = 0;
    for (std::uint64_t i = 0; i < n; ++i) acc += index_of(eval(f, Valuation(m, i)));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_TableScalar)->DenseRange(4, 10, 2);

void BM_Entails(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const auto alpha = FormulaAlphabet::core(m);
  Theory t;
  for (int i = 0; i < 8; ++i) t.add(random_formula(rng, alpha, 25));
  const Formula goal = random_formula(rng, alpha, 25);
  for (auto _ : state) benchmark::DoNotOptimize(entails(t, goal, m));
}
BENCHMARK(BM_Entails)->DenseRange(4, 12, 4);

void BM_CloneClosure(benchmark::State& state) {
  for (auto _ : state) {
    const Clone c({"0", "h", "join", "dpar"});
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_CloneClosure)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
