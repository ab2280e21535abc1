#include "cliquematch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "cliquematch/error.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch {

namespace {

void check_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError(std::string(who) + ": probability " + std::to_string(p) +
                        " outside [0, 1]");
  }
}

}  // namespace

RandomGraph::RandomGraph(int n, std::vector<Edge> edges, GraphParams params)
    : n_(n), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max(n, 0))),
      params_(params) {
  if (n < 0) throw ArgumentError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw ArgumentError("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool RandomGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

RandomGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  check_probability(p, "erdos_renyi");
  if (n < 1) throw ArgumentError("erdos_renyi: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return RandomGraph(n, std::move(edges), {p, std::nullopt, seed});
}

std::vector<Edge> symmetric_knn_edges(const Frame& frame, int k_nn) {
  const int n = static_cast<int>(frame.size());
  if (k_nn < 1 || k_nn >= n) {
    throw ArgumentError("k_nn must satisfy 1 <= k_nn < n (k_nn=" + std::to_string(k_nn) +
                        ", n=" + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  std::vector<int> order(n - 1);
  for (int u = 0; u < n; ++u) {
    order.clear();
    for (int v = 0; v < n; ++v) {
      if (v != u) order.push_back(v);
    }
    const Vec2 pu = frame[u].pos;
    std::partial_sort(order.begin(), order.begin() + k_nn, order.end(), [&](int a, int b) {
      const double da = squared_distance(pu, frame[a].pos);
      const double db = squared_distance(pu, frame[b].pos);
      if (da != db) return da < db;
      return frame[a].id < frame[b].id;
    });
    for (int i = 0; i < k_nn; ++i) edges.emplace_back(std::min(u, order[i]), std::max(u, order[i]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

RandomGraph knn_bernoulli_graph(const Frame& frame, int k_nn, double p, std::uint64_t seed) {
  check_probability(p, "knn_bernoulli_graph");
  auto candidates = symmetric_knn_edges(frame, k_nn);
  std::vector<Edge> kept;
  kept.reserve(candidates.size());
  for (const auto& [u, v] : candidates) {
    if (pair_uniform(seed, frame[u].id, frame[v].id) < p) kept.emplace_back(u, v);
  }
  return RandomGraph(static_cast<int>(frame.size()), std::move(kept), {p, k_nn, seed});
}

RandomGraph transport_graph(const RandomGraph& graph, const Frame& source, const Frame& target) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges()) {
    const int tu = target.index_of(source[u].id);
    const int tv = target.index_of(source[v].id);
    if (tu >= 0 && tv >= 0) edges.emplace_back(tu, tv);
  }
  return RandomGraph(static_cast<int>(target.size()), std::move(edges), graph.params());
}

void write_edge_list(std::ostream& out, const RandomGraph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

double edge_jaccard(const RandomGraph& a, const RandomGraph& b) {
  std::vector<Edge> common;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(common));
  const std::size_t uni = a.edge_count() + b.edge_count() - common.size();
  return uni == 0 ? 1.0 : static_cast<double>(common.size()) / static_cast<double>(uni);
}

}  // namespace cliquematch
