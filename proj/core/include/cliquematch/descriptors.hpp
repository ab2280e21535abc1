#pragma once

#include <span>
#include <vector>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/geometry.hpp"

namespace cliquematch {

/// Unweighted mean of the member coordinates. Vertex indices refer to the
/// frame's point order; throws ArgumentError on an out-of-range vertex.
Vec2 barycenter(const Clique& clique, const Frame& frame);

/// Overlap parameter l used for same-dimension neighbours at dimension k.
/// `overlap == 0` selects l = k.
constexpr int effective_overlap(int k, int overlap) { return overlap == 0 ? k : overlap; }

/// Neighbourhood of a clique: every proper face, every coface up to the
/// complex's max dimension, and the same-dimension cliques sharing at least
/// effective_overlap(k, overlap) vertices. Sorted by (dim, id).
std::vector<CliqueRef> clique_neighborhood(const CliqueComplex& c, CliqueRef ref, int overlap = 0);

struct AffineFit {
  std::vector<double> weights;
  double residual = 0.0;
};

/// Minimum-norm weights among the minimisers of |sum_i w_i x_i - center|
/// subject to sum_i w_i = 1. Requires at least one neighbour.
AffineFit affine_weights(Vec2 center, std::span<const Vec2> neighbors);

struct CliqueDescriptor {
  CliqueRef ref;
  Vec2 barycenter;
  std::vector<CliqueRef> neighborhood;
  std::vector<double> weights;
  double residual = 0.0;

  /// False when the neighbourhood is empty (no weights can be fitted).
  bool describable() const noexcept { return !neighborhood.empty(); }
};

/// Descriptors for every clique of a complex, indexed [dim][id].
struct ComplexDescriptors {
  int max_dim = 0;
  int overlap = 0;
  std::vector<std::vector<CliqueDescriptor>> by_dim;

  const std::vector<CliqueDescriptor>& at(int dim) const { return by_dim.at(dim); }
};

ComplexDescriptors describe_complex(const CliqueComplex& c, const Frame& frame, int overlap = 0);

/// CSV `dim,clique_id,cx,cy,residual,alpha...`, one row per clique.
void write_descriptors(std::ostream& out, const ComplexDescriptors& d);

}  // namespace cliquematch
