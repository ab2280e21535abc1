#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cliquematch/error.hpp"
#include "cliquematch/graph.hpp"
#include "fixtures.hpp"

namespace cm = cliquematch;

TEST(RandomGraph, RejectsSelfLoopsAndRange) {
  EXPECT_THROW(cm::RandomGraph(3, {{1, 1}}), cm::ArgumentError);
  EXPECT_THROW(cm::RandomGraph(3, {{0, 3}}), cm::ArgumentError);
}

TEST(RandomGraph, NormalisesAndMergesDuplicates) {
  const cm::RandomGraph g(4, {{2, 0}, {0, 2}, {3, 1}});
  EXPECT_EQ(g.edges(), (std::vector<cm::Edge>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{2}));
}

TEST(ErdosRenyi, CertainProbabilities) {
  EXPECT_EQ(cm::erdos_renyi(12, 1.0, 3).edge_count(), 66u);
  EXPECT_EQ(cm::erdos_renyi(12, 0.0, 3).edge_count(), 0u);
  EXPECT_THROW(cm::erdos_renyi(5, 1.5, 0), cm::ArgumentError);
  EXPECT_THROW(cm::erdos_renyi(5, -0.1, 0), cm::ArgumentError);
  EXPECT_THROW(cm::erdos_renyi(0, 0.5, 0), cm::ArgumentError);
}

TEST(ErdosRenyi, MeanEdgeCount) {
  constexpr int kSeeds = 10'000;
  double sum = 0.0, sq = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    const double e = static_cast<double>(cm::erdos_renyi(10, 0.5, s).edge_count());
    sum += e;
    sq += e * e;
  }
  const double mean = sum / kSeeds;
  const double var = (sq - kSeeds * mean * mean) / (kSeeds - 1);
  EXPECT_NEAR(mean, 22.5, 3.0 * std::sqrt(var / kSeeds));
}

TEST(ErdosRenyi, DeterministicAndDecorrelated) {
  EXPECT_EQ(cm::erdos_renyi(30, 0.5, 9), cm::erdos_renyi(30, 0.5, 9));
  for (int s = 0; s < 50; ++s) {
    EXPECT_LT(cm::edge_jaccard(cm::erdos_renyi(30, 0.5, s), cm::erdos_renyi(30, 0.5, s + 1000)), 1.0);
  }
}

TEST(KnnGraph, CollinearNearestNeighbour) {
  const cm::Frame f({{0, {0, 0}}, {1, {1, 0}}, {2, {2, 0}}});
  const auto g = cm::knn_bernoulli_graph(f, 1, 1.0, 0);
  EXPECT_EQ(g.edges(), (std::vector<cm::Edge>{{0, 1}, {1, 2}}));
}

TEST(KnnGraph, CompleteAndEmpty) {
  const auto f = cmtest::random_frame(9, 5);
  EXPECT_EQ(cm::knn_bernoulli_graph(f, 8, 1.0, 1).edge_count(), 36u);
  EXPECT_EQ(cm::knn_bernoulli_graph(f, 4, 0.0, 1).edge_count(), 0u);
  EXPECT_THROW(cm::knn_bernoulli_graph(f, 9, 1.0, 1), cm::ArgumentError);
  EXPECT_THROW(cm::knn_bernoulli_graph(f, 0, 1.0, 1), cm::ArgumentError);
}

TEST(KnnGraph, DuplicateCoordinatesTieByLowerId) {
  const cm::Frame f({{0, {0, 0}}, {1, {5, 0}}, {2, {5, 0}}, {3, {9, 9}}});
  const auto cand = cm::symmetric_knn_edges(f, 1);
  // Vertex 0's nearest are 1 and 2 at equal distance; 1 wins.
  EXPECT_TRUE(std::count(cand.begin(), cand.end(), cm::Edge{0, 1}));
  EXPECT_FALSE(std::count(cand.begin(), cand.end(), cm::Edge{0, 2}));
}

TEST(KnnGraph, EveryVertexReachesItsNearest) {
  const auto f = cmtest::random_frame(25, 6);
  const auto cand = cm::symmetric_knn_edges(f, 3);
  std::vector<int> deg(25, 0);
  for (const auto& [u, v] : cand) {
    ++deg[u];
    ++deg[v];
  }
  for (const int d : deg) EXPECT_GE(d, 3);
}

TEST(KnnGraph, EdgesAreSubsetOfCandidates) {
  for (int s = 0; s < 20; ++s) {
    const auto f = cmtest::random_frame(30, s);
    const auto cand = cm::symmetric_knn_edges(f, 7);
    const std::set<cm::Edge> cset(cand.begin(), cand.end());
    const auto g = cm::knn_bernoulli_graph(f, 7, 0.7, s);
    for (const auto& e : g.edges()) EXPECT_TRUE(cset.count(e));
  }
}

TEST(KnnGraph, ScaleInvariant) {
  for (int s = 0; s < 20; ++s) {
    const auto f = cmtest::random_frame(30, s);
    const auto scaled = cm::apply_transform(f, cm::AffineTransform::scale(3.5, 3.5));
    EXPECT_EQ(cm::knn_bernoulli_graph(f, 7, 0.7, s), cm::knn_bernoulli_graph(scaled, 7, 0.7, s));
  }
}

TEST(KnnGraph, DeterministicAndDecorrelated) {
  const auto f = cmtest::random_frame(30, 1);
  EXPECT_EQ(cm::knn_bernoulli_graph(f, 7, 0.5, 4), cm::knn_bernoulli_graph(f, 7, 0.5, 4));
  int below = 0;
  for (int s = 0; s < 50; ++s) {
    below += cm::edge_jaccard(cm::knn_bernoulli_graph(f, 7, 0.5, s), cm::knn_bernoulli_graph(f, 7, 0.5, s + 500)) < 1.0;
  }
  EXPECT_EQ(below, 50);
}

TEST(KnnGraph, KeepRateMatchesP) {
  const auto f = cmtest::random_frame(30, 2);
  const double candidates = static_cast<double>(cm::symmetric_knn_edges(f, 7).size());
  double kept = 0.0;
  constexpr int kSeeds = 2000;
  for (int s = 0; s < kSeeds; ++s) kept += static_cast<double>(cm::knn_bernoulli_graph(f, 7, 0.7, s).edge_count());
  const double se = std::sqrt(candidates * 0.7 * 0.3 / kSeeds);
  EXPECT_NEAR(kept / kSeeds, 0.7 * candidates, 3 * se);
}

TEST(KnnGraph, SharedSeedAgreesOnSharedPairs) {
  const auto f = cmtest::random_frame(30, 3);
  const auto g = cm::apply_transform(f, cm::AffineTransform::rotation(40));
  const auto a = cm::knn_bernoulli_graph(f, 7, 0.6, 17);
  const auto b = cm::knn_bernoulli_graph(g, 7, 0.6, 17);
  EXPECT_EQ(a, b);
}

TEST(TransportGraph, RelabelsById) {
  const auto f = cmtest::random_frame(10, 3);
  const auto g = cm::knn_bernoulli_graph(f, 4, 0.8, 2);
  const auto shuffled = cm::shuffle_points(f, 9);
  const auto moved = cm::transport_graph(g, f, shuffled);
  EXPECT_EQ(moved.edge_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    EXPECT_TRUE(moved.has_edge(shuffled.index_of(f[u].id), shuffled.index_of(f[v].id)));
  }
}

TEST(TransportGraph, DropsMissingIds) {
  const auto f = cmtest::random_frame(10, 3);
  const auto g = cm::erdos_renyi(10, 1.0, 0);
  const auto o = cm::occlude(f, 4, 1);
  EXPECT_EQ(cm::transport_graph(g, f, o.frame).edge_count(), 15u);
}

TEST(EdgeList, SortedOnePerLine) {
  std::ostringstream out;
  cm::write_edge_list(out, cm::RandomGraph(4, {{3, 2}, {0, 1}}));
  EXPECT_EQ(out.str(), "0 1\n2 3\n");
}

TEST(EdgeJaccard, Extremes) {
  const cm::RandomGraph a(4, {{0, 1}, {1, 2}});
  const cm::RandomGraph b(4, {{1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(cm::edge_jaccard(a, a), 1.0);
  EXPECT_DOUBLE_EQ(cm::edge_jaccard(a, b), 1.0 / 3.0);
}
