#include "cliquematch/theory/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch::theory {

std::optional<double> psi(int n, double lambda, double epsilon) {
  const double eps_prime = lambda - epsilon;
  if (!(eps_prime > 0.0)) return std::nullopt;
  const double log_perms = std::lgamma(n + 1.0);
  const double pairs = 0.5 * n * (n + 1.0);
  const double inner = eps_prime * std::sqrt(lambda) / (eps_prime + 2.0 * lambda);
  return 1.0 - 2.0 * std::exp(log_perms - 2.0 * pairs * inner * inner);
}

double worst_best_ratio(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  do {
    double s = 0.0;
    for (std::size_t v = 0; v < n; ++v) s += cost[v][perm[v]];
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (hi == lo) return 1.0;
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

RatioExperimentResult ratio_bound_experiment(const RatioExperimentSpec& spec) {
  if (spec.n < 1 || spec.n > 8) throw ArgumentError("ratio experiment needs 1 <= n <= 8");
  if (!(spec.lambda > 0.0)) throw ArgumentError("ratio experiment needs lambda > 0");
  if (!(spec.epsilon > 0.0)) throw ArgumentError("ratio experiment needs epsilon > 0");
  if (spec.trials < 1) throw ArgumentError("ratio experiment needs at least one trial");
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.fixed_cost) {
    if (spec.fixed_cost->size() != n) throw ArgumentError("fixed cost matrix must be n x n");
    for (const auto& row : *spec.fixed_cost) {
      if (row.size() != n) throw ArgumentError("fixed cost matrix must be n x n");
    }
  }

  const auto ratios = parallel_map(spec.trials, [&](std::size_t t) {
    if (spec.fixed_cost) return worst_best_ratio(*spec.fixed_cost);
    std::mt19937_64 rng(trial_seed(spec.seed, t));
    std::poisson_distribution<int> pois(spec.lambda);
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost) {
      for (auto& c : row) c = pois(rng);
    }
    return worst_best_ratio(cost);
  });

  RatioExperimentResult out;
  out.trials = spec.trials;
  double finite_sum = 0.0;
  std::size_t finite = 0;
  for (const double r : ratios) {
    if (r <= 1.0 + spec.epsilon) ++out.hits;
    if (std::isfinite(r)) {
      finite_sum += r;
      ++finite;
    }
  }
  out.empirical = static_cast<double>(out.hits) / static_cast<double>(out.trials);
  out.mean_ratio = finite ? finite_sum / static_cast<double>(finite) : std::numeric_limits<double>::infinity();
  out.psi = psi(spec.n, spec.lambda, spec.epsilon);
  out.violated = out.psi && *out.psi > 0.0 && out.empirical < *out.psi;
  return out;
}

}  // namespace cliquematch::theory
