#include "cliquematch/theory/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch::theory {

AffinityMatrix::AffinityMatrix(SymmetricMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.order(); ++i) {
    for (std::size_t j = i; j < m_.order(); ++j) {
      const double v = m_(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw ArgumentError("affinity entries must lie in [0, 1]");
    }
  }
}

LeadingEigen lawler_spectral(const AffinityMatrix& aff) {
  const auto& a = aff.matrix();
  const std::size_t n = a.order();
  LeadingEigen out;
  if (n == 0) return out;

  // Entries are non-negative, so the largest eigenvalue is the Perron root.
  // Shifting by the max row sum makes the spectrum non-negative and the
  // Perron root dominant in magnitude (bipartite graphs otherwise oscillate).
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += a(i, j);
    shift = std::max(shift, row);
  }

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> av(n);
  auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
  };

  constexpr int kMaxIterations = 100'000;
  double lambda = 0.0;
  double residual = 0.0;
  for (int it = 0; it <= kMaxIterations; ++it) {
    multiply(v, av);
    lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += v[i] * av[i];
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (av[i] - lambda * v[i]) * (av[i] - lambda * v[i]);
    residual = std::sqrt(residual);
    if (residual <= 1e-10 * std::max(1.0, std::abs(lambda))) {
      out.iterations = it;
      break;
    }
    if (it == kMaxIterations) throw NumericalError("power iteration did not converge", residual);
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      av[i] += shift * v[i];
      len += av[i] * av[i];
    }
    len = std::sqrt(len);
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / len;
  }

  for (const double x : v) {
    if (x != 0.0) {
      if (x < 0.0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  out.value = lambda;
  out.vector = std::move(v);
  return out;
}

AffinityMatrix bernoulli_affinity(std::size_t m, double q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SymmetricMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) a.set(i, j, unit(rng) < q ? 1.0 : 0.0);
  }
  return AffinityMatrix(std::move(a));
}

double talagrand_bound(double t) { return 4.0 * std::exp(-t * t / 8.0); }

TalagrandReport talagrand_check(std::size_t m, std::size_t trials, const std::vector<double>& t_grid,
                                std::uint64_t seed) {
  if (trials < 2000) throw ArgumentError("talagrand_check needs at least 2000 trials");
  struct Sample {
    double lambda = 0.0;
    bool sandwich = true;
  };
  const auto samples = parallel_map(trials, [&](std::size_t t) {
    const auto aff = bernoulli_affinity(m, 0.25, trial_seed(seed, t));
    const double lambda = lawler_spectral(aff).value;
    double total = 0.0, max_degree = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < m; ++j) d += aff.matrix()(i, j);
      total += d;
      max_degree = std::max(max_degree, d);
    }
    const double avg = m ? total / static_cast<double>(m) : 0.0;
    constexpr double kSlack = 1e-8;
    return Sample{lambda, avg <= lambda + kSlack && lambda <= max_degree + kSlack};
  });

  TalagrandReport out;
  out.m = m;
  out.trials = trials;
  std::vector<double> lambdas;
  lambdas.reserve(trials);
  for (const auto& s : samples) {
    lambdas.push_back(s.lambda);
    if (!s.sandwich) {
      out.degree_sandwich_ok = false;
      ++out.degree_sandwich_violations;
    }
  }
  std::sort(lambdas.begin(), lambdas.end());
  const std::size_t mid = trials / 2;
  out.median = trials % 2 ? lambdas[mid] : 0.5 * (lambdas[mid - 1] + lambdas[mid]);

  for (const double t : t_grid) {
    std::size_t hits = 0;
    for (const double l : lambdas) {
      if (std::abs(l - out.median) >= t) ++hits;
    }
    TailRow row;
    row.t = t;
    row.empirical = static_cast<double>(hits) / static_cast<double>(trials);
    row.bound = talagrand_bound(t);
    row.stderr_binomial = std::sqrt(row.empirical * (1.0 - row.empirical) / static_cast<double>(trials));
    row.ok = row.empirical <= row.bound + 3.0 * row.stderr_binomial;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace cliquematch::theory
