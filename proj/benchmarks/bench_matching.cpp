#include <benchmark/benchmark.h>

#include <random>

#include "cliquematch/matching.hpp"

namespace cm = cliquematch;

namespace {

cm::Frame uniform_frame(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::vector<cm::LandmarkPoint> pts;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng);
    pts.push_back({i, {x, u(rng)}});
  }
  return cm::Frame(std::move(pts));
}

}  // namespace

static void BM_MatchFrames(benchmark::State& state) {
  const auto a = uniform_frame(static_cast<int>(state.range(0)), 5);
  const auto b = cm::apply_transform_about_centroid(a, cm::AffineTransform::rotation(20));
  const cm::MatchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(cm::match_frames(a, b, cfg).vertex_correspondence.size());
}
BENCHMARK(BM_MatchFrames)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_DescribeComplex(benchmark::State& state) {
  const auto f = uniform_frame(static_cast<int>(state.range(0)), 6);
  const cm::MatchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(cm::prepare_frame(f, cfg, 1).descriptors.by_dim.size());
}
BENCHMARK(BM_DescribeComplex)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
