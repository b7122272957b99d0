/**
 * @file normalization.hpp
 * @brief Max, Sum and Vector column normalization plus weight application.
 */

#ifndef MCDM_NORMALIZATION_HPP
#define MCDM_NORMALIZATION_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

/**
 * @brief Max normalization. Benefit columns become f / max f, cost columns
 * min f / f, so every output column is benefit-type with entries in (0, 1].
 */
inline ScoreMatrix normalize_max(const DecisionProblem& problem) {
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();
  ScoreMatrix out{Stage::Normalized, Scheme::Max, Matrix(m, n),
                  std::vector<Direction>(n, Direction::Maximize)};
  for (std::size_t j = 0; j < n; ++j) {
    double lo = problem.value(0, j);
    double hi = lo;
    for (std::size_t i = 1; i < m; ++i) {
      lo = std::min(lo, problem.value(i, j));
      hi = std::max(hi, problem.value(i, j));
    }
    const bool benefit = problem.criteria()[j].direction == Direction::Maximize;
    for (std::size_t i = 0; i < m; ++i) {
      const double f = problem.value(i, j);
      out.values(i, j) = benefit ? f / hi : lo / f;
    }
  }
  return out;
}

/// Sum normalization: f / column total. Direction tags are carried through.
inline ScoreMatrix normalize_sum(const DecisionProblem& problem) {
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();
  ScoreMatrix out{Stage::Normalized, Scheme::Sum, Matrix(m, n), problem.directions()};
  for (std::size_t j = 0; j < n; ++j) {
    const double total = problem.values().column_sum(j);
    for (std::size_t i = 0; i < m; ++i) out.values(i, j) = problem.value(i, j) / total;
  }
  return out;
}

/// Vector normalization: f / Euclidean norm of the column. Direction tags are carried through.
inline ScoreMatrix normalize_vector(const DecisionProblem& problem) {
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();
  ScoreMatrix out{Stage::Normalized, Scheme::Vector, Matrix(m, n), problem.directions()};
  for (std::size_t j = 0; j < n; ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) sq += problem.value(i, j) * problem.value(i, j);
    const double norm = std::sqrt(sq);
    for (std::size_t i = 0; i < m; ++i) out.values(i, j) = problem.value(i, j) / norm;
  }
  return out;
}

inline ScoreMatrix apply_weights(const ScoreMatrix& normalized, std::span<const double> weights) {
  if (normalized.stage != Stage::Normalized) {
    throw Error(ErrorCode::SchemeMismatch, "apply_weights expects a Normalized score matrix");
  }
  if (weights.size() != normalized.values.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "score matrix has " + std::to_string(normalized.values.cols()) +
                    " columns but " + std::to_string(weights.size()) + " weights were given");
  }
  ScoreMatrix out = normalized;
  out.stage = Stage::Weighted;
  for (std::size_t i = 0; i < out.values.rows(); ++i) {
    for (std::size_t j = 0; j < out.values.cols(); ++j) out.values(i, j) *= weights[j];
  }
  return out;
}

}  // namespace mcdm

#endif  // MCDM_NORMALIZATION_HPP
