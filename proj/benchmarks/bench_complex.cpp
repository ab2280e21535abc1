#include <benchmark/benchmark.h>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/graph.hpp"

namespace cm = cliquematch;

static void BM_EnumerateErdosRenyi(benchmark::State& state) {
  const auto g = cm::erdos_renyi(static_cast<int>(state.range(0)), 0.2, 3);
  for (auto _ : state) {
    const auto c = cm::CliqueComplex::enumerate(g, 2);
    benchmark::DoNotOptimize(c.count(2));
  }
}
BENCHMARK(BM_EnumerateErdosRenyi)->RangeMultiplier(2)->Range(32, 256);

static void BM_SkeletonAdjacency(benchmark::State& state) {
  const auto g = cm::erdos_renyi(static_cast<int>(state.range(0)), 0.2, 4);
  const auto c = cm::CliqueComplex::enumerate(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cm::skeleton_adjacency(c, 2, 2).nnz());
}
BENCHMARK(BM_SkeletonAdjacency)->RangeMultiplier(2)->Range(32, 256);
