#include "cliquematch/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cliquematch/error.hpp"

namespace cliquematch {

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ArgumentError("ragged cost matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Assignment hungarian(const CostMatrix& cost) {
  Assignment result;
  if (cost.empty()) return result;

  const std::size_t rows = cost.rows();
  const std::size_t cols = cost.cols();
  double max_abs = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = cost(r, c);
      if (!std::isfinite(v)) throw ArgumentError("hungarian: non-finite cost");
      max_abs = std::max(max_abs, std::abs(v));
    }
  }
  const std::size_t n = std::max(rows, cols);
  const double sentinel = max_abs > 0.0 ? 10.0 * max_abs : 1.0;
  auto at = [&](std::size_t r, std::size_t c) {
    return (r < rows && c < cols) ? cost(r, c) : sentinel;
  };

  // 1-based arrays; column 0 is the virtual source of each augmentation.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    match_col[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = at(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        // Strict comparison keeps the lowest column among equal slacks.
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  // Among optimal assignments (perfect matchings on zero reduced cost edges)
  // take the lexicographically smallest: rows in order, lowest column first.
  const double tol = 1e-9 + 1e-12 * sentinel;
  auto tight = [&](std::size_t r, std::size_t c) { return at(r, c) - u[r + 1] - v[c + 1] <= tol; };
  std::vector<std::size_t> col_of(n), row_of(n);
  for (std::size_t j = 1; j <= n; ++j) {
    row_of[j - 1] = match_col[j] - 1;
    col_of[match_col[j] - 1] = j - 1;
  }
  std::vector<std::size_t> parent(n);
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t current = col_of[r];
    for (std::size_t j = 0; j < current; ++j) {
      const std::size_t owner = row_of[j];
      if (owner < r || !tight(r, j)) continue;
      // Alternating path owner -> ... -> current over unfixed rows, avoiding j.
      std::fill(seen.begin(), seen.end(), 0);
      seen[j] = 1;
      std::vector<std::size_t> queue = {owner};
      std::size_t found_row = n;
      for (std::size_t qi = 0; qi < queue.size() && found_row == n; ++qi) {
        const std::size_t x = queue[qi];
        for (std::size_t y = 0; y < n; ++y) {
          if (seen[y] || row_of[y] < r || !tight(x, y)) continue;
          seen[y] = 1;
          parent[y] = x;
          if (y == current) {
            found_row = x;
            break;
          }
          queue.push_back(row_of[y]);
        }
      }
      if (found_row == n) continue;
      // Shift every row on the path to the column that discovered it.
      std::size_t y = current;
      while (true) {
        const std::size_t x = parent[y];
        const std::size_t prev = col_of[x];
        col_of[x] = y;
        row_of[y] = x;
        if (x == owner) break;
        y = prev;
      }
      col_of[r] = j;
      row_of[j] = r;
      break;
    }
  }

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = row_of[j - 1];
    const std::size_t c = j - 1;
    if (r < rows && c < cols) {
      result.pairs.emplace_back(static_cast<int>(r), static_cast<int>(c));
      result.total_cost += cost(r, c);
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace cliquematch
