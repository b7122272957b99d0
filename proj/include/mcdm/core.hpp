/**
 * @file core.hpp
 * @brief Decision problem, score containers and ranking results shared by all methods.
 */

#ifndef MCDM_CORE_HPP
#define MCDM_CORE_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcdm/error.hpp"
#include "mcdm/matrix.hpp"

namespace mcdm {

enum class Direction { Maximize, Minimize };

constexpr std::string_view to_string(Direction d) {
  return d == Direction::Maximize ? "max" : "min";
}

struct CriterionSpec {
  std::string label;
  Direction direction = Direction::Maximize;
  double weight = 0.0;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Weights must add up to one within this tolerance.
inline constexpr double kWeightSumTolerance = 1e-6;

/**
 * @brief Alternatives-by-criteria matrix with per-criterion direction and weight.
 *
 * The constructor only checks that the shapes agree; the value-level
 * invariants (positivity, weight sum, unique labels) are checked by
 * validate_problem() so that malformed input can be reported precisely.
 */
class DecisionProblem {
 public:
  DecisionProblem(std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                  Matrix values)
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        values_(std::move(values)) {
    if (values_.rows() != alternatives_.size() || values_.cols() != criteria_.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "value matrix is " + std::to_string(values_.rows()) + "x" +
                      std::to_string(values_.cols()) + " but there are " +
                      std::to_string(alternatives_.size()) + " alternatives and " +
                      std::to_string(criteria_.size()) + " criteria");
    }
  }

  [[nodiscard]] std::size_t num_alternatives() const noexcept { return alternatives_.size(); }
  [[nodiscard]] std::size_t num_criteria() const noexcept { return criteria_.size(); }

  [[nodiscard]] const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  [[nodiscard]] const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }
  [[nodiscard]] const Matrix& values() const noexcept { return values_; }
  [[nodiscard]] double value(std::size_t i, std::size_t j) const { return values_(i, j); }

  [[nodiscard]] std::vector<double> weights() const {
    std::vector<double> w;
    w.reserve(criteria_.size());
    for (const auto& c : criteria_) w.push_back(c.weight);
    return w;
  }

  [[nodiscard]] std::vector<Direction> directions() const {
    std::vector<Direction> d;
    d.reserve(criteria_.size());
    for (const auto& c : criteria_) d.push_back(c.direction);
    return d;
  }

  /// Same alternatives and values, different criterion weights.
  [[nodiscard]] DecisionProblem with_weights(std::span<const double> weights) const {
    if (weights.size() != criteria_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(criteria_.size()) +
                                                    " weights, got " +
                                                    std::to_string(weights.size()));
    }
    auto criteria = criteria_;
    for (std::size_t j = 0; j < criteria.size(); ++j) criteria[j].weight = weights[j];
    return {alternatives_, std::move(criteria), values_};
  }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<CriterionSpec> criteria_;
  Matrix values_;
};

struct IngestOptions {
  /// Rescale weights to sum to one instead of rejecting a sum that is off.
  bool renormalize_weights = false;
};

namespace detail {

inline void require_unique(const std::vector<std::string>& labels, std::string_view what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorCode::DuplicateLabel, std::string(what) + " label is empty");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, std::string(what) + " label '" + l + "' repeats");
    }
  }
}

}  // namespace detail

/**
 * @brief Checks every DecisionProblem and CriterionSpec invariant.
 *
 * Returns the problem unchanged, or with its weights rescaled when
 * `options.renormalize_weights` is set. Idempotent.
 */
inline DecisionProblem validate_problem(const DecisionProblem& problem, IngestOptions options = {}) {
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();
  if (m == 0 || n == 0) {
    throw Error(ErrorCode::EmptyMatrix, "need at least one alternative and one criterion");
  }
  detail::require_unique(problem.alternatives(), "alternative");
  std::vector<std::string> criterion_labels;
  for (const auto& c : problem.criteria()) criterion_labels.push_back(c.label);
  detail::require_unique(criterion_labels, "criterion");

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = problem.value(i, j);
      const std::string where = problem.alternatives()[i] + "/" + problem.criteria()[j].label;
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "value at " + where);
      if (v <= 0.0) {
        throw Error(ErrorCode::NonPositiveValue,
                    "value at " + where + " is " + std::to_string(v) + "; all values must be > 0");
      }
    }
  }

  double sum = 0.0;
  for (const auto& c : problem.criteria()) {
    if (!std::isfinite(c.weight) || c.weight <= 0.0) {
      throw Error(ErrorCode::WeightSumError, "weight of '" + c.label + "' must be > 0");
    }
    sum += c.weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    if (!options.renormalize_weights) {
      throw Error(ErrorCode::WeightSumError, "weights sum to " + std::to_string(sum));
    }
    auto w = problem.weights();
    for (auto& x : w) x /= sum;
    return problem.with_weights(w);
  }
  for (const auto& c : problem.criteria()) {
    if (c.weight > 1.0) throw Error(ErrorCode::WeightSumError, "weight of '" + c.label + "' > 1");
  }
  return problem;
}

enum class Stage { Normalized, Weighted };
enum class Scheme { Max, Sum, Vector };

constexpr std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Max: return "max";
    case Scheme::Sum: return "sum";
    case Scheme::Vector: return "vector";
  }
  return "?";
}

/**
 * @brief Stage-tagged m x n score matrix.
 *
 * `directions` records which criteria are still cost-type. Max normalization
 * folds minimization into the values, so its output is all Maximize; the Sum
 * and Vector schemes keep the original tags for the later split.
 */
struct ScoreMatrix {
  Stage stage = Stage::Normalized;
  Scheme scheme = Scheme::Max;
  Matrix values;
  std::vector<Direction> directions;
};

enum class MethodId { Saw, Mew, Ahp, Anp, Copras, Moora, Fuca, Waspas, Unspecified };

constexpr std::string_view to_string(MethodId m) {
  switch (m) {
    case MethodId::Saw: return "saw";
    case MethodId::Mew: return "mew";
    case MethodId::Ahp: return "ahp";
    case MethodId::Anp: return "anp";
    case MethodId::Copras: return "copras";
    case MethodId::Moora: return "moora";
    case MethodId::Fuca: return "fuca";
    case MethodId::Waspas: return "waspas";
    case MethodId::Unspecified: return "unspecified";
  }
  return "?";
}

inline std::optional<MethodId> parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto m : {MethodId::Saw, MethodId::Mew, MethodId::Ahp, MethodId::Anp, MethodId::Copras,
                 MethodId::Moora, MethodId::Fuca, MethodId::Waspas}) {
    if (to_string(m) == lower) return m;
  }
  return std::nullopt;
}

enum class Ordering { HigherScoreBetter, LowerScoreBetter };

constexpr Ordering ordering_for(MethodId m) {
  return m == MethodId::Fuca ? Ordering::LowerScoreBetter : Ordering::HigherScoreBetter;
}

/// Relative tolerance under which two scores count as tied.
inline constexpr double kTieTolerance = 1e-12;

inline bool scores_tied(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kTieTolerance * scale;
}

/**
 * @brief Averaged ("fractional") ranks: rank 1 is best, tied values share
 * the mean of the positions they span, so ranks always sum to m(m+1)/2.
 */
inline std::vector<double> fractional_ranks(std::span<const double> values, Ordering ordering) {
  const std::size_t m = values.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ordering == Ordering::HigherScoreBetter ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(m, 0.0);
  std::size_t start = 0;
  while (start < m) {
    std::size_t end = start + 1;
    while (end < m && scores_tied(values[idx[end - 1]], values[idx[end]])) ++end;
    // positions start+1 .. end share their mean
    const double rank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) ranks[idx[k]] = rank;
    start = end;
  }
  return ranks;
}

struct RankingResult {
  MethodId method = MethodId::Unspecified;
  std::vector<std::string> alternatives;
  std::vector<double> scores;
  std::vector<double> ranks;
  Ordering ordering = Ordering::HigherScoreBetter;
  std::map<std::string, double> diagnostics;

  /// Alternative indices from best to worst; ties keep input order.
  [[nodiscard]] std::vector<std::size_t> order() const {
    std::vector<std::size_t> idx(ranks.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
    return idx;
  }

  /// Index of the best alternative (first in input order among ties).
  [[nodiscard]] std::size_t top() const { return order().front(); }

  [[nodiscard]] std::string label(std::size_t i) const {
    return i < alternatives.size() ? alternatives[i] : "#" + std::to_string(i + 1);
  }

  /// Renders e.g. "A4 > A3 > A1 = A2".
  [[nodiscard]] std::string ranking_line() const {
    std::string out;
    const auto idx = order();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) out += ranks[idx[k]] == ranks[idx[k - 1]] ? " = " : " > ";
      out += label(idx[k]);
    }
    return out;
  }
};

/// Ranks scores under the given ordering; the method tag is left Unspecified.
inline RankingResult rank_from_scores(std::vector<double> scores, Ordering ordering) {
  RankingResult r;
  r.ranks = fractional_ranks(scores, ordering);
  r.scores = std::move(scores);
  r.ordering = ordering;
  return r;
}

namespace detail {

inline RankingResult make_result(MethodId method, const DecisionProblem& problem,
                                 std::vector<double> scores) {
  auto r = rank_from_scores(std::move(scores), ordering_for(method));
  r.method = method;
  r.alternatives = problem.alternatives();
  return r;
}

}  // namespace detail

}  // namespace mcdm

#endif  // MCDM_CORE_HPP
