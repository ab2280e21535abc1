#include <benchmark/benchmark.h>

#include <random>

#include "cliquematch/hungarian.hpp"

namespace cm = cliquematch;

static void BM_HungarianSquare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  cm::CostMatrix c(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) c(r, k) = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(cm::hungarian(c).total_cost);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HungarianSquare)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

static void BM_HungarianRectangular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  cm::CostMatrix c(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < 2 * n; ++k) c(r, k) = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(cm::hungarian(c).total_cost);
}
BENCHMARK(BM_HungarianRectangular)->RangeMultiplier(2)->Range(16, 256);
