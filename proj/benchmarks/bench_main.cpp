#include <benchmark/benchmark.h>

#include "stablegraph/canonical.hpp"
#include "stablegraph/enumeration.hpp"
#include "stablegraph/moves.hpp"
#include "stablegraph/one_stratum.hpp"
#include "stablegraph/symmetry.hpp"

using namespace stablegraph;

static void BM_CanonicalKeyK4(benchmark::State& state) {
  const auto g = named::k4();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKeyK4);

static void BM_CanonicalKeyGenus5(benchmark::State& state) {
  const auto graphs = enumerate_stratum_classes(5, 0);
  for (auto _ : state) {
    for (const auto& c : graphs) benchmark::DoNotOptimize(canonical_key(c.graph));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalKeyGenus5)->Unit(benchmark::kMillisecond);

static void BM_AutomorphismGroup(benchmark::State& state) {
  const auto g = named::k4();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismGroup);

static void BM_Table(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table(genus).total());
}
BENCHMARK(BM_Table)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ClassifyAll(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(genus).size());
}
BENCHMARK(BM_ClassifyAll)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_OneStratumAdjacency(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(one_stratum_adjacency(4).connected);
}
BENCHMARK(BM_OneStratumAdjacency)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
