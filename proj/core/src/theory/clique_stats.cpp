#include "cliquematch/theory/clique_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch::theory {

namespace {

std::uint64_t extend(const RandomGraph& g, const std::vector<int>& candidates, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int v = candidates[i];
    if (remaining == 1) {
      ++total;
      continue;
    }
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
    }
    total += extend(g, next, remaining - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const RandomGraph& g, int k) {
  if (k < 0) throw ArgumentError("count_cliques: k must be non-negative");
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return extend(g, all, k);
}

double expected_clique_count(int n, double p, int k) {
  return binomial(n, k) * std::pow(p, binomial(k, 2));
}

double clique_count_bound(int n, int k) {
  return std::pow(std::exp(1.0) * n / k, k);
}

double percolation_scale_p(int n, int k, int l) {
  return std::pow(static_cast<double>(n), -2.0 / (k + l - 1));
}

double exhaustive_clique_mean(int n, double p, int k) {
  if (n > 7) throw ArgumentError("exhaustive_clique_mean: n > 7 refused");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::size_t m = pairs.size();
  double mean = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask >> b & 1) edges.push_back(pairs[b]);
    }
    const double present = static_cast<double>(edges.size());
    const double weight = std::pow(p, present) * std::pow(1.0 - p, static_cast<double>(m) - present);
    mean += weight * static_cast<double>(count_cliques(RandomGraph(n, std::move(edges)), k));
  }
  return mean;
}

CliqueCountStats clique_count_stats(int n, double p, int k, std::size_t trials, std::uint64_t seed) {
  if (trials < 1000) throw ArgumentError("clique_count_stats needs at least 1000 trials");
  if (k < 1 || k > n) throw ArgumentError("clique_count_stats: need 1 <= k <= n");
  const auto counts = parallel_map(trials, [&](std::size_t t) {
    return count_cliques(erdos_renyi(n, p, trial_seed(seed, t)), k);
  });

  CliqueCountStats out;
  out.n = n;
  out.p = p;
  out.k = k;
  out.trials = trials;
  out.expectation = expected_clique_count(n, p, k);
  out.bound = clique_count_bound(n, k);
  double sum = 0.0;
  for (const auto c : counts) {
    sum += static_cast<double>(c);
    out.max_observed = std::max(out.max_observed, c);
  }
  out.mean = sum / static_cast<double>(trials);
  double ss = 0.0;
  for (const auto c : counts) ss += (static_cast<double>(c) - out.mean) * (static_cast<double>(c) - out.mean);
  out.variance = ss / static_cast<double>(trials - 1);
  out.standard_error = std::sqrt(out.variance / static_cast<double>(trials));
  out.poissonness = out.mean > 0.0 ? out.variance / out.mean : std::numeric_limits<double>::quiet_NaN();
  // A zero standard error (p in {0, 1}) demands an exact match.
  out.mean_ok = std::abs(out.mean - out.expectation) <= 3.0 * out.standard_error + 1e-9 * out.expectation;
  out.bound_ok = static_cast<double>(out.max_observed) <= out.bound;
  return out;
}

}  // namespace cliquematch::theory
