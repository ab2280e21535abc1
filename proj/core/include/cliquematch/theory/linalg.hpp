#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace cliquematch::theory {

/// Real symmetric matrix stored as its upper triangle, so symmetry is exact.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n, double fill = 0.0);
  /// Row-major dense input; throws ArgumentError unless exactly symmetric
  /// and finite.
  static SymmetricMatrix from_dense(const std::vector<std::vector<double>>& rows);
  static SymmetricMatrix identity(std::size_t n);
  /// Entries drawn by `draw` for i <= j (diagonal included).
  static SymmetricMatrix random(std::size_t n, std::mt19937_64& rng,
                                const std::function<double(std::mt19937_64&)>& draw);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { data_[slot(i, j)] = v; }

  double frobenius_norm() const;
  std::vector<std::vector<double>> dense() const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  /// Ascending.
  std::vector<double> values;
  /// vectors[i] is the unit eigenvector for values[i].
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// 1e-12 times the matrix norm.
EigenDecomposition jacobi_eigen(const SymmetricMatrix& a);

/// Largest absolute eigenvalue (the operator 2-norm of a symmetric matrix).
double operator_norm(const SymmetricMatrix& a);

}  // namespace cliquematch::theory
