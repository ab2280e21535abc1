#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cliquematch::theory {

struct RatioExperimentSpec {
  int n = 6;
  double lambda = 10.0;
  double epsilon = 0.5;
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
  /// When set, every trial uses this n x n cost matrix instead of sampling.
  std::optional<std::vector<std::vector<double>>> fixed_cost;
};

/// 1 - 2 n! exp(-2 C(n+1,2) (e' sqrt(lambda) / (e' + 2 lambda))^2) with
/// e' = lambda - epsilon. nullopt when e' <= 0.
std::optional<double> psi(int n, double lambda, double epsilon);

/// max over permutations of sum_v C[v][pi(v)] divided by the min. Equal
/// extremes give 1 (including both zero); a zero min otherwise gives +inf.
double worst_best_ratio(const std::vector<std::vector<double>>& cost);

struct RatioExperimentResult {
  std::size_t trials = 0;
  std::size_t hits = 0;
  double empirical = 0.0;
  std::optional<double> psi;
  double mean_ratio = 0.0;
  /// psi > 0 and the empirical probability fell below it.
  bool violated = false;
};

/// Requires 1 <= n <= 8, lambda > 0, epsilon > 0, trials >= 1.
RatioExperimentResult ratio_bound_experiment(const RatioExperimentSpec& spec);

}  // namespace cliquematch::theory
