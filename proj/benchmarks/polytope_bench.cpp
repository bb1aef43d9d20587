#include <benchmark/benchmark.h>

#include "pms/classify.hpp"
#include "pms/named_graphs.hpp"
#include "pms/oracle.hpp"
#include "pms/polytope.hpp"

namespace {

void BM_InequalitySystem(benchmark::State& state) {
  const pms::Graph g = pms::named::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pms::inequality_system(g));
}
BENCHMARK(BM_InequalitySystem)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_GorensteinGeometricBipartite(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const pms::Graph g = pms::named::complete_bipartite(p, p);
  for (auto _ : state) benchmark::DoNotOptimize(pms::gorenstein_geometric(g));
}
BENCHMARK(BM_GorensteinGeometricBipartite)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GorensteinGeometricOddCycle(benchmark::State& state) {
  const pms::Graph g = pms::named::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pms::gorenstein_geometric(g));
}
BENCHMARK(BM_GorensteinGeometricOddCycle)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_SullivantGluedBlocks(benchmark::State& state) {
  const pms::Graph g = pms::named::glued_blocks_example();
  for (auto _ : state) benchmark::DoNotOptimize(pms::sullivant_compressed(g));
}
BENCHMARK(BM_SullivantGluedBlocks)->Unit(benchmark::kMillisecond);

void BM_IdpCheck(benchmark::State& state) {
  const pms::Graph g = pms::named::cycle(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pms::idp_check(g, k, pms::DilateLattice::Polytope));
}
BENCHMARK(BM_IdpCheck)->Args({6, 2})->Args({8, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_ClassifyAll(benchmark::State& state) {
  const pms::Graph g = pms::named::even_cycle_pseudotree_example();
  for (auto _ : state) benchmark::DoNotOptimize(pms::classify_all(g));
}
BENCHMARK(BM_ClassifyAll)->Unit(benchmark::kMillisecond);

}  // namespace
