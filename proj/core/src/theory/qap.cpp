#include "cliquematch/theory/qap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch::theory {

TraceBounds trace_qap_bounds(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) throw ArgumentError("trace_qap_bounds: orders differ");
  const auto la = jacobi_eigen(a).values;  // ascending
  auto lb = jacobi_eigen(b).values;
  std::reverse(lb.begin(), lb.end());  // descending
  const std::size_t n = la.size();
  TraceBounds out;
  for (std::size_t i = 0; i < n; ++i) {
    out.lower += la[i] * lb[i];
    out.upper += la[n - 1 - i] * lb[i];
  }
  return out;
}

double permuted_trace(const SymmetricMatrix& a, const SymmetricMatrix& b,
                      const std::vector<int>& perm) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) t += a(i, j) * b(perm[i], perm[j]);
  }
  return t;
}

TraceQapExhaustive brute_force_trace_qap(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw ArgumentError("brute_force_trace_qap: orders differ");
  if (n > 8) throw ArgumentError("brute_force_trace_qap: n > 8 refused");
  const auto ea = jacobi_eigen(a);
  const auto eb = jacobi_eigen(b);

  TraceQapExhaustive out;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -std::numeric_limits<double>::infinity();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const double t = permuted_trace(a, b, perm);
    // lambda(A)^T Q lambda(B) with Q[i][j] = <qA_i, X qB_j>^2, (X v)_r = v[perm[r]].
    double via_spectrum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += ea.vectors[i][r] * eb.vectors[j][perm[r]];
        via_spectrum += ea.values[i] * dot * dot * eb.values[j];
      }
    }
    out.max_identity_error = std::max(out.max_identity_error, std::abs(t - via_spectrum));
    if (t < out.min) {
      out.min = t;
      out.argmin = perm;
    }
    if (t > out.max) {
      out.max = t;
      out.argmax = perm;
    }
    ++out.permutations;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SpreadReport spread_and_gaps(const SymmetricMatrix& a, MatrixNorm norm) {
  SpreadReport out;
  if (a.order() == 0) return out;
  out.eigenvalues = jacobi_eigen(a).values;
  for (std::size_t i = 0; i + 1 < out.eigenvalues.size(); ++i) {
    out.gaps.push_back(out.eigenvalues[i + 1] - out.eigenvalues[i]);
    out.gap_sum += out.gaps.back();
  }
  out.spread = out.eigenvalues.back() - out.eigenvalues.front();
  out.norm_value = norm == MatrixNorm::kOperator2
                       ? std::max(std::abs(out.eigenvalues.front()), std::abs(out.eigenvalues.back()))
                       : a.frobenius_norm();
  for (const double g : out.gaps) {
    if (g > 2.0 * out.norm_value) out.gap_bound_ok = false;
  }
  return out;
}

double spread(const SymmetricMatrix& a) {
  if (a.order() == 0) return 0.0;
  const auto v = jacobi_eigen(a).values;
  return v.back() - v.front();
}

FinkeResult finke_reduction(const SymmetricMatrix& a) {
  const std::size_t n = a.order();
  std::vector<double> half_mean(n, 0.0);
  if (n > 1) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) s += a(i, j);
      }
      half_mean[j] = 0.5 * s / static_cast<double>(n - 1);
    }
  }
  FinkeResult out{SymmetricMatrix(n), spread(a), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.reduced.set(i, j, a(i, j) - half_mean[j] - half_mean[i]);
  }
  out.spread_after = spread(out.reduced);
  return out;
}

SymmetricMatrix uniform_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  return SymmetricMatrix::random(n, rng, [&](std::mt19937_64& r) { return unit(r); });
}

SpreadConcentration spread_concentration(std::size_t n, std::size_t trials, std::uint64_t seed,
                                         const MatrixGenerator& gen) {
  if (trials < 1000) throw ArgumentError("spread_concentration needs at least 1000 trials");
  const auto samples = parallel_map(trials, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    return spread(gen(n, rng));
  });
  SpreadConcentration out;
  out.trials = trials;
  out.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(trials);
  double var = 0.0;
  for (const double s : samples) var += (s - out.mean) * (s - out.mean);
  out.stddev = std::sqrt(var / static_cast<double>(trials - 1));
  for (int k = 1; k <= 3; ++k) {
    std::size_t hits = 0;
    for (const double s : samples) {
      if (out.stddev > 0.0 && std::abs(s - out.mean) >= k * out.stddev) ++hits;
    }
    out.tail.push_back(static_cast<double>(hits) / static_cast<double>(trials));
  }
  return out;
}

}  // namespace cliquematch::theory
