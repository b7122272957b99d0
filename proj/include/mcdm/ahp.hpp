/**
 * @file ahp.hpp
 * @brief Goal -> criteria -> alternatives hierarchy: criteria weights,
 * local priorities per criterion and the weighted global aggregation.
 */

#ifndef MCDM_AHP_HPP
#define MCDM_AHP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/pairwise.hpp"

namespace mcdm {

/// Marker: derive each criterion's alternative matrix from the problem's values.
struct DeriveFromProblem {};

struct AhpModel {
  /// Criteria comparison matrix, or explicit weights summing to one.
  std::variant<PairwiseMatrix, std::vector<double>> criteria;
  /// One m x m matrix per criterion, or the logarithmic mapping of the ACM.
  std::variant<std::vector<PairwiseMatrix>, DeriveFromProblem> alternatives = DeriveFromProblem{};
};

struct AhpOptions {
  /// Reject any matrix with CR > 0.1 instead of only flagging it.
  bool strict = false;
  EigenOptions eigen{};
};

struct CriteriaWeights {
  std::vector<double> weights;
  ConsistencyReport report;
};

namespace detail {

inline ConsistencyReport checked_consistency(double lambda_max, std::size_t order,
                                             const AhpOptions& options, const std::string& what) {
  auto report = consistency(lambda_max, order);
  if (options.strict && !report.acceptable) {
    throw Error(ErrorCode::InconsistentJudgments,
                what + " has CR = " + std::to_string(report.cr) + " > 0.1");
  }
  return report;
}

}  // namespace detail

inline CriteriaWeights ahp_criteria_weights(const PairwiseMatrix& m, const AhpOptions& options = {}) {
  auto p = priority_vector(m, options.eigen);
  auto report = detail::checked_consistency(p.lambda_max, m.order(), options, "criteria matrix");
  return {std::move(p.weights), report};
}

struct LocalPriorities {
  Matrix values;  ///< m x n, column j holds the priorities under criterion j
  std::vector<ConsistencyReport> reports;
  std::vector<PairwiseMatrix> matrices;
};

/**
 * @brief Priority vector of every criterion's alternative matrix.
 *
 * `problem` may be null when the model carries its own matrices; deriving
 * matrices without a problem is a MissingProblem error.
 */
inline LocalPriorities ahp_local_priorities(const AhpModel& model, const DecisionProblem* problem,
                                            const AhpOptions& options = {}) {
  std::vector<PairwiseMatrix> matrices;
  if (std::holds_alternative<DeriveFromProblem>(model.alternatives)) {
    if (problem == nullptr) {
      throw Error(ErrorCode::MissingProblem,
                  "alternative matrices must be supplied or derived from a decision problem");
    }
    for (std::size_t j = 0; j < problem->num_criteria(); ++j) {
      matrices.push_back(acm_to_pairwise(*problem, j));
    }
  } else {
    matrices = std::get<std::vector<PairwiseMatrix>>(model.alternatives);
  }
  if (matrices.empty()) throw Error(ErrorCode::EmptyMatrix, "no alternative matrices");

  const std::size_t m = matrices.front().order();
  const std::size_t n = matrices.size();
  if (problem != nullptr &&
      (problem->num_alternatives() != m || problem->num_criteria() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "alternative matrices do not match the problem shape");
  }
  LocalPriorities out{Matrix(m, n), {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (matrices[j].order() != m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "alternative matrix " + std::to_string(j + 1) + " has order " +
                      std::to_string(matrices[j].order()) + ", expected " + std::to_string(m));
    }
    auto p = priority_vector(matrices[j], options.eigen);
    out.reports.push_back(detail::checked_consistency(
        p.lambda_max, m, options, "alternative matrix " + std::to_string(j + 1)));
    for (std::size_t i = 0; i < m; ++i) out.values(i, j) = p.weights[i];
  }
  out.matrices = std::move(matrices);
  return out;
}

/// Global priorities P_i = sum_j w_j v_ij.
inline RankingResult ahp_rank(std::span<const double> weights, const Matrix& local) {
  if (weights.size() != local.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(weights.size()) +
                                                  " weights for " + std::to_string(local.cols()) +
                                                  " local priority columns");
  }
  std::vector<double> p(local.rows(), 0.0);
  for (std::size_t i = 0; i < local.rows(); ++i) {
    for (std::size_t j = 0; j < local.cols(); ++j) p[i] += weights[j] * local(i, j);
  }
  auto r = rank_from_scores(std::move(p), Ordering::HigherScoreBetter);
  r.method = MethodId::Ahp;
  return r;
}

struct AhpResult {
  std::vector<double> weights;
  std::optional<ConsistencyReport> criteria_report;  ///< absent for explicit weights
  LocalPriorities local;
  RankingResult ranking;
};

/// Full pipeline: criteria weights, local priorities, global aggregation.
inline AhpResult ahp(const AhpModel& model, const DecisionProblem* problem,
                     const AhpOptions& options = {}) {
  AhpResult out;
  if (const auto* matrix = std::get_if<PairwiseMatrix>(&model.criteria)) {
    auto cw = ahp_criteria_weights(*matrix, options);
    out.weights = std::move(cw.weights);
    out.criteria_report = cw.report;
  } else {
    out.weights = std::get<std::vector<double>>(model.criteria);
  }
  out.local = ahp_local_priorities(model, problem, options);
  out.ranking = ahp_rank(out.weights, out.local.values);
  if (problem != nullptr) {
    out.ranking.alternatives = problem->alternatives();
  } else {
    out.ranking.alternatives = out.local.matrices.front().labels();
  }
  if (out.criteria_report) {
    out.ranking.diagnostics["lambda_max"] = out.criteria_report->lambda_max;
    out.ranking.diagnostics["ci"] = out.criteria_report->ci;
    out.ranking.diagnostics["cr"] = out.criteria_report->cr;
  }
  return out;
}

}  // namespace mcdm

#endif  // MCDM_AHP_HPP
