/**
 * @file pairwise.hpp
 * @brief Saaty pairwise comparison matrices: construction, priorities,
 * consistency and the logarithmic mapping of a criterion column onto the 1-9 scale.
 */

#ifndef MCDM_PAIRWISE_HPP
#define MCDM_PAIRWISE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/linalg.hpp"
#include "mcdm/normalization.hpp"

namespace mcdm {

inline constexpr double kSaatyMin = 1.0 / 9.0;
inline constexpr double kSaatyMax = 9.0;
inline constexpr double kReciprocityTolerance = 1e-9;
inline constexpr double kAcceptableCr = 0.1;

/// Random consistency index for orders 1..10.
inline constexpr std::array<double, 10> kRandomIndex = {0.0,  0.0,  0.58, 0.90, 1.12,
                                                        1.24, 1.32, 1.41, 1.45, 1.49};

namespace detail {

inline bool on_saaty_scale(double v) {
  constexpr double slack = 1e-12;
  return v >= kSaatyMin * (1.0 - slack) && v <= kSaatyMax * (1.0 + slack);
}

}  // namespace detail

/**
 * @brief Positive reciprocal matrix with unit diagonal and entries in [1/9, 9].
 *
 * `labels` name the compared items (criteria, alternatives or network nodes)
 * and may be empty.
 */
class PairwiseMatrix {
 public:
  explicit PairwiseMatrix(SquareMatrix entries, std::vector<std::string> labels = {})
      : entries_(std::move(entries)), labels_(std::move(labels)) {
    const std::size_t n = entries_.order();
    if (!labels_.empty() && labels_.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "pairwise matrix of order " + std::to_string(n) +
                                                    " with " + std::to_string(labels_.size()) +
                                                    " labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_(i, i) != 1.0) {
        throw Error(ErrorCode::InvalidPairwise, "diagonal entry " + std::to_string(i) + " is not 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double a = entries_(i, j);
        if (!(a > 0.0)) throw Error(ErrorCode::InvalidPairwise, "entries must be positive");
        if (!detail::on_saaty_scale(a)) {
          throw Error(ErrorCode::ScaleViolation,
                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                          std::to_string(a) + " is outside [1/9, 9]");
        }
        if (std::abs(a * entries_(j, i) - 1.0) > kReciprocityTolerance) {
          throw Error(ErrorCode::InvalidPairwise, "entries (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) +
                                                      ") and its mirror are not reciprocal");
        }
      }
    }
  }

  [[nodiscard]] std::size_t order() const noexcept { return entries_.order(); }
  [[nodiscard]] const SquareMatrix& entries() const noexcept { return entries_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  SquareMatrix entries_;
  std::vector<std::string> labels_;
};

/// One judgment: item `row` compared with item `col` (0-based).
struct Comparison {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 1.0;
};

/**
 * @brief Builds a full matrix from the n(n-1)/2 judgments above the diagonal.
 *
 * A judgment given as (j, i) with j > i is read as (i, j, 1/value).
 */
inline PairwiseMatrix build_pairwise(std::size_t order, std::span<const Comparison> judgments,
                                     std::vector<std::string> labels = {}) {
  if (order == 0) throw Error(ErrorCode::EmptyMatrix, "pairwise matrix of order 0");
  Matrix a = Matrix::identity(order);
  std::vector<bool> seen(order * order, false);
  for (const auto& c : judgments) {
    if (c.row >= order || c.col >= order) {
      throw Error(ErrorCode::DimensionMismatch, "comparison (" + std::to_string(c.row + 1) + "," +
                                                    std::to_string(c.col + 1) +
                                                    ") is outside order " + std::to_string(order));
    }
    if (c.row == c.col) {
      throw Error(ErrorCode::InvalidPairwise, "diagonal comparisons are fixed at 1");
    }
    if (!std::isfinite(c.value) || !detail::on_saaty_scale(c.value)) {
      throw Error(ErrorCode::ScaleViolation, "comparison (" + std::to_string(c.row + 1) + "," +
                                                 std::to_string(c.col + 1) + ") = " +
                                                 std::to_string(c.value) + " is outside [1/9, 9]");
    }
    const bool upper = c.row < c.col;
    const std::size_t i = upper ? c.row : c.col;
    const std::size_t j = upper ? c.col : c.row;
    const double v = upper ? c.value : 1.0 / c.value;
    if (seen[i * order + j]) {
      throw Error(ErrorCode::DuplicateComparison,
                  "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") given twice");
    }
    seen[i * order + j] = true;
    a(i, j) = v;
    a(j, i) = 1.0 / v;
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      if (!seen[i * order + j]) {
        throw Error(ErrorCode::MissingComparison,
                    "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") missing");
      }
    }
  }
  return PairwiseMatrix(SquareMatrix(std::move(a)), std::move(labels));
}

struct Priorities {
  std::vector<double> weights;
  double lambda_max = 0.0;
};

/// Sum-normalized principal eigenvector and its eigenvalue.
inline Priorities priority_vector(const PairwiseMatrix& m, EigenOptions options = {}) {
  if (m.order() == 1) return {{1.0}, 1.0};
  auto pair = principal_eigenpair(m.entries(), options);
  return {std::move(pair.vector), pair.lambda_max};
}

struct ConsistencyReport {
  double lambda_max = 0.0;
  double ci = 0.0;
  double ri = 0.0;
  double cr = 0.0;
  bool acceptable = true;
};

/**
 * @brief CI = (lambda_max - n)/(n - 1), CR = CI/RI with Saaty's table.
 *
 * Orders 1 and 2 have RI = 0 and are always consistent, so CR is reported as 0.
 */
inline ConsistencyReport consistency(double lambda_max, std::size_t order) {
  if (order < 1 || order > kRandomIndex.size()) {
    throw Error(ErrorCode::OrderOutOfRange,
                "random index is tabulated for orders 1..10, got " + std::to_string(order));
  }
  ConsistencyReport r;
  r.lambda_max = lambda_max;
  r.ri = kRandomIndex[order - 1];
  if (order >= 2) r.ci = (lambda_max - static_cast<double>(order)) / static_cast<double>(order - 1);
  r.cr = order <= 2 ? 0.0 : r.ci / r.ri;
  r.acceptable = r.cr <= kAcceptableCr;
  return r;
}

/**
 * @brief Maps one criterion column onto the 1-9 scale with the logarithmic transformation.
 *
 * The column is Max-normalized first. With r the ratio of the largest to the
 * smallest normalized value, F_i >= F_k gives a_ik = 8 ln(F_i/F_k) / ln(r) + 1
 * and the mirror entry is its reciprocal. A constant column maps to all ones.
 */
inline PairwiseMatrix acm_to_pairwise(const DecisionProblem& problem, std::size_t criterion) {
  if (criterion >= problem.num_criteria()) {
    throw Error(ErrorCode::DimensionMismatch, "criterion index " + std::to_string(criterion) +
                                                  " out of range");
  }
  const std::size_t m = problem.num_alternatives();
  const auto normalized = normalize_max(problem);
  std::vector<double> f = normalized.values.column(criterion);
  const double hi = *std::max_element(f.begin(), f.end());
  const double lo = *std::min_element(f.begin(), f.end());
  const double log_range = std::log(hi / lo);

  Matrix a = Matrix::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (i == k || f[i] < f[k]) continue;
      const double v = log_range > 0.0 ? std::log(f[i] / f[k]) / log_range * 8.0 + 1.0 : 1.0;
      a(i, k) = v;
      a(k, i) = 1.0 / v;
    }
  }
  return PairwiseMatrix(SquareMatrix(std::move(a)), problem.alternatives());
}

}  // namespace mcdm

#endif  // MCDM_PAIRWISE_HPP
