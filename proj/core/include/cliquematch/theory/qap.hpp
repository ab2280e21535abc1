#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cliquematch/theory/linalg.hpp"

namespace cliquematch::theory {

struct TraceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Eigenvalue sandwich for tr(A X B X^T) over permutation matrices X:
/// lower pairs ascending eigenvalues of A with descending ones of B, upper
/// pairs both descending.
TraceBounds trace_qap_bounds(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// tr(A X B X^T) for the permutation X with X[i][perm[i]] = 1.
double permuted_trace(const SymmetricMatrix& a, const SymmetricMatrix& b,
                      const std::vector<int>& perm);

struct TraceQapExhaustive {
  double min = 0.0;
  double max = 0.0;
  std::vector<int> argmin;
  std::vector<int> argmax;
  /// Largest |tr(A X B X^T) - lambda(A)^T Q(X) lambda(B)| over permutations.
  double max_identity_error = 0.0;
  std::size_t permutations = 0;
};

/// Exhaustive over all n! permutations; refuses n > 8.
TraceQapExhaustive brute_force_trace_qap(const SymmetricMatrix& a, const SymmetricMatrix& b);

enum class MatrixNorm { kOperator2, kFrobenius };

struct SpreadReport {
  std::vector<double> eigenvalues;
  /// eigenvalues[i+1] - eigenvalues[i].
  std::vector<double> gaps;
  double spread = 0.0;
  double gap_sum = 0.0;
  double norm_value = 0.0;
  bool gap_bound_ok = true;
};

SpreadReport spread_and_gaps(const SymmetricMatrix& a, MatrixNorm norm = MatrixNorm::kOperator2);

double spread(const SymmetricMatrix& a);

struct FinkeResult {
  SymmetricMatrix reduced;
  double spread_before = 0.0;
  double spread_after = 0.0;
};

/// A - M - M^T - D with M[i][j] = half the mean off-diagonal entry of column
/// j and D the diagonal that zeroes the result's diagonal.
FinkeResult finke_reduction(const SymmetricMatrix& a);

using MatrixGenerator = std::function<SymmetricMatrix(std::size_t n, std::mt19937_64&)>;

/// Entries i.i.d. uniform on [-1, 1].
SymmetricMatrix uniform_symmetric(std::size_t n, std::mt19937_64& rng);

struct SpreadConcentration {
  double mean = 0.0;
  double stddev = 0.0;
  /// Fraction of samples with |spread - mean| >= k * stddev, k = 1, 2, 3.
  std::vector<double> tail;
  std::size_t trials = 0;
};

/// Requires trials >= 1000.
SpreadConcentration spread_concentration(std::size_t n, std::size_t trials, std::uint64_t seed,
                                         const MatrixGenerator& gen = uniform_symmetric);

}  // namespace cliquematch::theory
