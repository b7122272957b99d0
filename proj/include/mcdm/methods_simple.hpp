/**
 * @file methods_simple.hpp
 * @brief SAW, MEW and WASPAS over the Max-normalized matrix.
 */

#ifndef MCDM_METHODS_SIMPLE_HPP
#define MCDM_METHODS_SIMPLE_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/normalization.hpp"

namespace mcdm {

inline constexpr double kDefaultWaspasLambda = 0.5;

namespace detail {

inline std::vector<double> saw_scores(const ScoreMatrix& f, std::span<const double> w) {
  std::vector<double> p(f.values.rows(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) p[i] += w[j] * f.values(i, j);
  }
  return p;
}

// exp(sum w ln F) == prod F^w for F > 0
inline std::vector<double> mew_scores(const ScoreMatrix& f, std::span<const double> w) {
  std::vector<double> p(f.values.rows(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) log_sum += w[j] * std::log(f.values(i, j));
    p[i] = std::exp(log_sum);
  }
  return p;
}

inline void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::LambdaOutOfRange, "lambda = " + std::to_string(lambda) +
                                                 " is outside [0, 1]");
  }
}

}  // namespace detail

/// Simple additive weighting: P_i = sum_j w_j F_ij.
inline RankingResult saw(const DecisionProblem& problem) {
  const auto f = normalize_max(problem);
  return detail::make_result(MethodId::Saw, problem, detail::saw_scores(f, problem.weights()));
}

/// Multiplicative exponent weighting: P_i = prod_j F_ij^w_j.
inline RankingResult mew(const DecisionProblem& problem) {
  const auto f = normalize_max(problem);
  return detail::make_result(MethodId::Mew, problem, detail::mew_scores(f, problem.weights()));
}

/// P_i = lambda * SAW_i + (1 - lambda) * MEW_i.
inline RankingResult waspas(const DecisionProblem& problem, double lambda = kDefaultWaspasLambda) {
  detail::require_lambda(lambda);
  const auto f = normalize_max(problem);
  const auto w = problem.weights();
  const auto additive = detail::saw_scores(f, w);
  const auto multiplicative = detail::mew_scores(f, w);
  std::vector<double> p(additive.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = lambda * additive[i] + (1.0 - lambda) * multiplicative[i];
  }
  auto r = detail::make_result(MethodId::Waspas, problem, std::move(p));
  r.diagnostics["lambda"] = lambda;
  return r;
}

/// One WASPAS result per lambda, in input order. All lambdas are checked up front.
inline std::vector<RankingResult> waspas_sweep(const DecisionProblem& problem,
                                               std::span<const double> lambdas) {
  for (double l : lambdas) detail::require_lambda(l);
  std::vector<RankingResult> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.push_back(waspas(problem, l));
  return out;
}

}  // namespace mcdm

#endif  // MCDM_METHODS_SIMPLE_HPP
