#pragma once

#include <cstdint>
#include <vector>

#include "cliquematch/theory/linalg.hpp"

namespace cliquematch::theory {

/// Symmetric matrix with every entry in [0, 1].
class AffinityMatrix {
 public:
  /// Throws ArgumentError when an entry is outside [0, 1].
  explicit AffinityMatrix(SymmetricMatrix m);

  const SymmetricMatrix& matrix() const noexcept { return m_; }
  std::size_t order() const noexcept { return m_.order(); }

 private:
  SymmetricMatrix m_;
};

struct LeadingEigen {
  double value = 0.0;
  /// Unit vector, first non-zero component positive.
  std::vector<double> vector;
  int iterations = 0;
};

/// Leading eigenpair by shifted power iteration; stops when the residual
/// |Av - lambda v| drops below 1e-10 * max(1, |lambda|). Throws
/// NumericalError after 1e5 iterations.
LeadingEigen lawler_spectral(const AffinityMatrix& aff);

/// Adjacency matrix of G(m, q) as a 0/1 affinity matrix.
AffinityMatrix bernoulli_affinity(std::size_t m, double q, std::uint64_t seed);

/// P[|lambda_1 - median| >= t] <= 4 exp(-t^2 / 8).
double talagrand_bound(double t);

struct TailRow {
  double t = 0.0;
  double empirical = 0.0;
  double bound = 0.0;
  double stderr_binomial = 0.0;
  bool ok = true;
};

struct TalagrandReport {
  std::size_t m = 0;
  std::size_t trials = 0;
  double median = 0.0;
  std::vector<TailRow> rows;
  /// Every sample satisfied average degree <= lambda_1 <= max degree.
  bool degree_sandwich_ok = true;
  std::size_t degree_sandwich_violations = 0;
};

/// Samples `trials` adjacency matrices of G(m, 1/4). Requires trials >= 2000.
TalagrandReport talagrand_check(std::size_t m, std::size_t trials, const std::vector<double>& t_grid,
                                std::uint64_t seed);

}  // namespace cliquematch::theory
