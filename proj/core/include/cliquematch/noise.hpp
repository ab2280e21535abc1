#pragma once

#include <cstdint>

#include "cliquematch/graph.hpp"

namespace cliquematch {

enum class NoiseModel { kI, kII };

struct NoiseSpec {
  NoiseModel model = NoiseModel::kI;
  /// Model I: flip probability for every pair. Model II: edge removal.
  double q = 0.0;
  /// Model II only: probability of adding each non-edge.
  double r = 0.0;
  std::uint64_t seed = 0;
};

/// Graph-level perturbation. Throws ArgumentError when q or r is outside [0, 1].
RandomGraph perturb(const RandomGraph& g, const NoiseSpec& spec);

}  // namespace cliquematch
