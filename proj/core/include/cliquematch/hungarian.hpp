#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace cliquematch {

/// Dense row-major real matrix used for assignment costs.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Assignment {
  /// (row, col) pairs sorted by row; covers min(rows, cols) rows.
  std::vector<std::pair<int, int>> pairs;
  double total_cost = 0.0;
};

/// Minimum-cost one-to-one assignment (Kuhn-Munkres, O(n^3) shortest
/// augmenting paths with dual potentials). Rectangular inputs are padded to
/// square with a sentinel of 10x the largest finite cost. Throws
/// ArgumentError on non-finite costs.
Assignment hungarian(const CostMatrix& cost);

}  // namespace cliquematch
