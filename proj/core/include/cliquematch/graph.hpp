#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cliquematch/geometry.hpp"

namespace cliquematch {

using Edge = std::pair<int, int>;

struct GraphParams {
  double p = 1.0;
  std::optional<int> k_nn;
  std::uint64_t seed = 0;
};

/// Simple undirected graph on vertices [0, n). Edges are stored sorted with
/// u < v; adjacency lists are sorted ascending.
class RandomGraph {
 public:
  RandomGraph() = default;
  /// Throws ArgumentError on self-loops or out-of-range endpoints; duplicates
  /// are merged.
  RandomGraph(int n, std::vector<Edge> edges, GraphParams params = {});

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const GraphParams& params() const noexcept { return params_; }

  friend bool operator==(const RandomGraph& a, const RandomGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  GraphParams params_;
};

/// G(n, p): every pair included independently with probability p.
RandomGraph erdos_renyi(int n, double p, std::uint64_t seed);

/// Symmetric k-nearest-neighbour candidates (union rule, ties by point id),
/// each kept with probability p. The keep decision for a pair depends only on
/// (seed, id_u, id_v), so two frames sharing a seed agree on shared pairs.
RandomGraph knn_bernoulli_graph(const Frame& frame, int k_nn, double p, std::uint64_t seed);

/// Candidate edge set of knn_bernoulli_graph before thinning.
std::vector<Edge> symmetric_knn_edges(const Frame& frame, int k_nn);

/// Re-expresses `graph` (built on `source`) on the vertex indices of `target`
/// by point id. Edges touching ids missing from `target` are dropped.
RandomGraph transport_graph(const RandomGraph& graph, const Frame& source, const Frame& target);

/// Sorted `u v` edge list, one per line.
void write_edge_list(std::ostream& out, const RandomGraph& g);

double edge_jaccard(const RandomGraph& a, const RandomGraph& b);

}  // namespace cliquematch
