#include <benchmark/benchmark.h>

#include "pms/matchable.hpp"
#include "pms/named_graphs.hpp"

namespace {

void BM_MatchableSubsetsCycle(benchmark::State& state) {
  const pms::Graph g = pms::named::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pms::matchable_subsets(g));
}
BENCHMARK(BM_MatchableSubsetsCycle)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_MatchableSubsetsComplete(benchmark::State& state) {
  const pms::Graph g = pms::named::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pms::matchable_subsets(g));
}
BENCHMARK(BM_MatchableSubsetsComplete)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_PerfectMatchingNonbipartite(benchmark::State& state) {
  const pms::Graph g = pms::named::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pms::has_perfect_matching(g));
}
BENCHMARK(BM_PerfectMatchingNonbipartite)->Arg(12)->Arg(20)->Arg(32);

}  // namespace
