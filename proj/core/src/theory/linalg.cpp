#include "cliquematch/theory/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cliquematch/error.hpp"

namespace cliquematch::theory {

SymmetricMatrix::SymmetricMatrix(std::size_t n, double fill) : n_(n), data_(n * (n + 1) / 2, fill) {}

SymmetricMatrix SymmetricMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ArgumentError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j])) throw ArgumentError("matrix entries must be finite");
      if (rows[i][j] != rows[j][i]) throw ArgumentError("matrix is not symmetric");
    }
    for (std::size_t j = i; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::random(std::size_t n, std::mt19937_64& rng,
                                        const std::function<double(std::mt19937_64&)>& draw) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, draw(rng));
  }
  return m;
}

double SymmetricMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) sum += (*this)(i, j) * (*this)(i, j);
  }
  return std::sqrt(sum);
}

std::vector<std::vector<double>> SymmetricMatrix::dense() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

EigenDecomposition jacobi_eigen(const SymmetricMatrix& input) {
  const std::size_t n = input.order();
  auto a = input.dense();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  const double scale = input.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    }
    return std::sqrt(s);
  };

  EigenDecomposition out;
  constexpr int kMaxSweeps = 100;
  while (off_norm() > 1e-12 * scale) {
    if (out.sweeps++ >= kMaxSweeps) throw NumericalError("Jacobi did not converge", off_norm());
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        // Rotation angle that zeroes a[p][q] (Golub & Van Loan, sym.schur2).
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  for (const std::size_t idx : order) {
    out.values.push_back(a[idx][idx]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

double operator_norm(const SymmetricMatrix& a) {
  if (a.order() == 0) return 0.0;
  const auto eig = jacobi_eigen(a);
  return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

}  // namespace cliquematch::theory
