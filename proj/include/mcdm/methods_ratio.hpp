/**
 * @file methods_ratio.hpp
 * @brief COPRAS, MOORA and FUCA: methods that keep benefit and cost criteria apart.
 */

#ifndef MCDM_METHODS_RATIO_HPP
#define MCDM_METHODS_RATIO_HPP

#include <cstddef>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/normalization.hpp"

namespace mcdm {

/// Per-alternative sums over benefit (s_plus) and cost (s_minus) columns.
struct SplitSums {
  std::vector<double> s_plus;
  std::vector<double> s_minus;
  std::size_t benefit_count = 0;  ///< number of Maximize criteria
};

/// Columns are not reordered; the direction tags decide which sum a column feeds.
inline SplitSums split_sums(const ScoreMatrix& weighted, std::span<const Direction> directions) {
  if (weighted.stage != Stage::Weighted) {
    throw Error(ErrorCode::SchemeMismatch, "split_sums expects a Weighted score matrix");
  }
  if (directions.size() != weighted.values.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "direction count does not match column count");
  }
  const std::size_t m = weighted.values.rows();
  SplitSums out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), 0};
  for (std::size_t j = 0; j < directions.size(); ++j) {
    const bool benefit = directions[j] == Direction::Maximize;
    if (benefit) ++out.benefit_count;
    auto& target = benefit ? out.s_plus : out.s_minus;
    for (std::size_t i = 0; i < m; ++i) target[i] += weighted.values(i, j);
  }
  return out;
}

/**
 * @brief Complex proportional assessment over the Sum-normalized weighted matrix.
 *
 * P_i = S_i+ + (sum_k S_k-) / (S_i- * sum_k 1/S_k-). With no cost criteria the
 * second term is dropped; with no benefit criteria S_i+ is zero and only the
 * second term remains.
 */
inline RankingResult copras(const DecisionProblem& problem) {
  const auto weighted = apply_weights(normalize_sum(problem), problem.weights());
  const auto sums = split_sums(weighted, weighted.directions);
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();

  std::vector<double> p = sums.s_plus;
  if (sums.benefit_count < n) {
    double total_minus = 0.0;
    double total_inverse = 0.0;
    for (double s : sums.s_minus) {
      total_minus += s;
      total_inverse += 1.0 / s;
    }
    for (std::size_t i = 0; i < m; ++i) {
      p[i] += total_minus / (sums.s_minus[i] * total_inverse);
    }
  }
  return detail::make_result(MethodId::Copras, problem, std::move(p));
}

/// Ratio system: P_i = S_i+ - S_i- over the Vector-normalized weighted matrix.
inline RankingResult moora(const DecisionProblem& problem) {
  const auto weighted = apply_weights(normalize_vector(problem), problem.weights());
  const auto sums = split_sums(weighted, weighted.directions);
  std::vector<double> p(problem.num_alternatives());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = sums.s_plus[i] - sums.s_minus[i];
  return detail::make_result(MethodId::Moora, problem, std::move(p));
}

/// Rank of each alternative under each criterion (1 = best, ties averaged).
inline Matrix criterion_ranks(const DecisionProblem& problem) {
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();
  Matrix ranks(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto column = problem.values().column(j);
    const auto ordering = problem.criteria()[j].direction == Direction::Maximize
                              ? Ordering::HigherScoreBetter
                              : Ordering::LowerScoreBetter;
    const auto r = fractional_ranks(column, ordering);
    for (std::size_t i = 0; i < m; ++i) ranks(i, j) = r[i];
  }
  return ranks;
}

/// Weighted rank sum R_i = sum_j r_ij w_j; lower is better.
inline RankingResult fuca(const DecisionProblem& problem) {
  const auto ranks = criterion_ranks(problem);
  const auto w = problem.weights();
  std::vector<double> total(problem.num_alternatives(), 0.0);
  for (std::size_t i = 0; i < total.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) total[i] += ranks(i, j) * w[j];
  }
  return detail::make_result(MethodId::Fuca, problem, std::move(total));
}

}  // namespace mcdm

#endif  // MCDM_METHODS_RATIO_HPP
