/**
 * @file linalg.hpp
 * @brief Principal eigenpair by power iteration and supermatrix limits.
 */

#ifndef MCDM_LINALG_HPP
#define MCDM_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mcdm/error.hpp"
#include "mcdm/matrix.hpp"

namespace mcdm {

/// Square matrix with finite entries.
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) {
      throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(m_.rows()) + "x" +
                                                    std::to_string(m_.cols()) + ", not square");
    }
    if (m_.rows() == 0) throw Error(ErrorCode::EmptyMatrix, "square matrix of order 0");
    if (!m_.all_finite()) throw Error(ErrorCode::NonFiniteValue, "matrix has non-finite entries");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : SquareMatrix(Matrix(rows)) {}

  [[nodiscard]] std::size_t order() const noexcept { return m_.rows(); }
  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  Matrix m_;
};

struct EigenOptions {
  double tol = 1e-12;
  std::size_t max_iter = 10'000;
};

struct Eigenpair {
  double lambda_max = 0.0;
  std::vector<double> vector;  ///< non-negative, sums to 1
  std::size_t iterations = 0;
};

/**
 * @brief Dominant eigenpair of a non-negative matrix by power iteration.
 *
 * Starts from the uniform vector and sum-normalizes each step, so with
 * sum(v) = 1 the eigenvalue estimate is sum(M v). Stops once both the
 * estimate and the vector move by less than `tol`; the returned pair then
 * satisfies |M v - lambda v|_inf < tol * lambda.
 *
 * Requires non-negative entries and a positive entry in every row.
 */
inline Eigenpair principal_eigenpair(const SquareMatrix& m, EigenOptions options = {}) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    bool positive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0.0) throw Error(ErrorCode::InvalidPairwise, "negative matrix entry");
      positive = positive || m(i, j) > 0.0;
    }
    if (!positive) throw Error(ErrorCode::InvalidPairwise, "row " + std::to_string(i) + " is zero");
  }

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  double lambda_prev = 0.0;
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    auto y = m.matrix() * v;
    double lambda = 0.0;
    for (double x : y) lambda += x;
    double step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= lambda;
      step = std::max(step, std::abs(y[i] - v[i]));
    }
    if (step < options.tol && std::abs(lambda - lambda_prev) < options.tol) {
      return {lambda, std::move(v), iter};
    }
    lambda_prev = lambda;
    v = std::move(y);
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not settle within " + std::to_string(options.max_iter) +
                  " iterations (periodic or ill-conditioned matrix?)");
}

struct LimitOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000;
};

/**
 * @brief lim W^k for a column-stochastic W (all-zero columns allowed).
 *
 * Squares W until successive powers agree within `tol`, then looks for the
 * smallest period d with W^d P == P. For d == 1 that is the plain limit; for
 * periodic chains the result is the Cesaro mean (1/d) sum_{r<d} W^r P.
 */
inline SquareMatrix limit_supermatrix(const SquareMatrix& w, LimitOptions options = {}) {
  const std::size_t n = w.order();
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w(i, j) < 0.0) throw Error(ErrorCode::InvalidSupermatrix, "negative supermatrix entry");
      s += w(i, j);
    }
    if (s != 0.0 && std::abs(s - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidSupermatrix,
                  "column " + std::to_string(j) + " sums to " + std::to_string(s));
    }
  }

  const Matrix& base = w.matrix();
  Matrix power = base;
  const std::size_t max_squarings = std::min<std::size_t>(options.max_iter, 64);
  for (std::size_t k = 0; k < max_squarings; ++k) {
    Matrix next = power * power;
    const double change = max_abs_diff(next, power);
    power = std::move(next);
    if (change < options.tol) break;
  }

  Matrix shifted = power;
  Matrix sum = power;
  for (std::size_t period = 1; period <= options.max_iter; ++period) {
    shifted = base * shifted;
    if (max_abs_diff(shifted, power) < options.tol) {
      Matrix avg(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          avg(i, j) = std::clamp(sum(i, j) / static_cast<double>(period), 0.0, 1.0);
        }
      }
      return SquareMatrix(std::move(avg));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += shifted(i, j);
    }
  }
  throw Error(ErrorCode::NoConvergence, "supermatrix powers did not settle into a cycle within " +
                                            std::to_string(options.max_iter) + " steps");
}

}  // namespace mcdm

#endif  // MCDM_LINALG_HPP
