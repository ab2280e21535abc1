#pragma once

#include <cstdint>

#include "cliquematch/graph.hpp"

namespace cliquematch::theory {

/// Number of complete subgraphs on exactly k vertices.
std::uint64_t count_cliques(const RandomGraph& g, int k);

/// C(n, k) p^C(k, 2).
double expected_clique_count(int n, double p, int k);

/// (e n / k)^k.
double clique_count_bound(int n, int k);

/// n^(-2 / (k + l - 1)), unit constant. k and l are vertex counts.
double percolation_scale_p(int n, int k, int l);

/// Mean k-clique count over all 2^C(n,2) graphs on n vertices, each weighted
/// by its G(n, p) probability. Refuses n > 7.
double exhaustive_clique_mean(int n, double p, int k);

struct CliqueCountStats {
  int n = 0;
  double p = 0.0;
  int k = 0;
  std::size_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;
  double expectation = 0.0;
  double bound = 0.0;
  std::uint64_t max_observed = 0;
  /// variance / mean; NaN when the mean is 0.
  double poissonness = 0.0;
  bool mean_ok = true;
  bool bound_ok = true;
};

/// Monte Carlo k-clique counts over G(n, p). Requires trials >= 1000 and
/// 1 <= k <= n.
CliqueCountStats clique_count_stats(int n, double p, int k, std::size_t trials, std::uint64_t seed);

}  // namespace cliquematch::theory
