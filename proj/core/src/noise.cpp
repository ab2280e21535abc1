#include "cliquematch/noise.hpp"

#include <random>

#include "cliquematch/error.hpp"

namespace cliquematch {

RandomGraph perturb(const RandomGraph& g, const NoiseSpec& spec) {
  if (!(spec.q >= 0.0 && spec.q <= 1.0) || !(spec.r >= 0.0 && spec.r <= 1.0)) {
    throw ArgumentError("noise probabilities must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool present = g.has_edge(u, v);
      const double draw = unit(rng);
      bool keep;
      if (spec.model == NoiseModel::kI) {
        keep = present != (draw < spec.q);
      } else {
        keep = present ? !(draw < spec.q) : draw < spec.r;
      }
      if (keep) edges.emplace_back(u, v);
    }
  }
  return RandomGraph(n, std::move(edges), g.params());
}

}  // namespace cliquematch
