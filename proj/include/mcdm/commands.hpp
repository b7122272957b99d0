/**
 * @file commands.hpp
 * @brief The command layer behind the `mcdm` tool: each command returns a
 * Report carrying a structured JSON document plus table and CSV renderings.
 *
 * Tables round to 4 decimals; JSON and CSV carry full precision.
 */

#ifndef MCDM_COMMANDS_HPP
#define MCDM_COMMANDS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcdm/ahp.hpp"
#include "mcdm/anp.hpp"
#include "mcdm/io.hpp"
#include "mcdm/methods_ratio.hpp"
#include "mcdm/methods_simple.hpp"

namespace mcdm {

enum class OutputFormat { Table, Json, Csv };

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

struct Report {
  nlohmann::json data;
  std::string table;
  std::string csv;
  std::vector<std::string> warnings;
};

inline std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report.data.dump(2) + "\n";
    case OutputFormat::Csv: return report.csv;
    case OutputFormat::Table: return report.table;
  }
  return report.table;
}

/// The six methods that work directly on an alternatives-criteria matrix.
inline constexpr std::array<MethodId, 6> kMatrixMethods = {
    MethodId::Saw, MethodId::Mew, MethodId::Copras, MethodId::Moora, MethodId::Fuca, MethodId::Waspas};

inline MethodId parse_matrix_method(std::string_view name) {
  auto m = parse_method(name);
  if (!m || std::find(kMatrixMethods.begin(), kMatrixMethods.end(), *m) == kMatrixMethods.end()) {
    throw Error(ErrorCode::UnknownMethod,
                "'" + std::string(name) + "' (expected saw, mew, copras, moora, fuca or waspas)");
  }
  return *m;
}

struct MethodOptions {
  double lambda = kDefaultWaspasLambda;
};

inline RankingResult run_method(MethodId method, const DecisionProblem& problem,
                                const MethodOptions& options = {}) {
  switch (method) {
    case MethodId::Saw: return saw(problem);
    case MethodId::Mew: return mew(problem);
    case MethodId::Copras: return copras(problem);
    case MethodId::Moora: return moora(problem);
    case MethodId::Fuca: return fuca(problem);
    case MethodId::Waspas: return waspas(problem, options.lambda);
    default:
      throw Error(ErrorCode::UnknownMethod,
                  std::string(to_string(method)) + " does not rank an alternatives-criteria matrix");
  }
}

namespace detail {

inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string rank_text(double r) {
  char buf[32];
  if (r == static_cast<double>(static_cast<long long>(r))) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(r));
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", r);
  }
  return buf;
}

/// Left-aligned first column, right-aligned rest.
inline std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::string pad(width[c] - r[c].size(), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string ordering_name(Ordering o) {
  return o == Ordering::HigherScoreBetter ? "higher_is_better" : "lower_is_better";
}

/// Best alternative(s); tied winners are joined with '='.
inline std::string top_label(const RankingResult& r) {
  const auto idx = r.order();
  std::string out = r.label(idx.front());
  for (std::size_t k = 1; k < idx.size() && r.ranks[idx[k]] == r.ranks[idx.front()]; ++k) {
    out += "=" + r.label(idx[k]);
  }
  return out;
}

inline nlohmann::json ranking_json(const RankingResult& r) {
  nlohmann::json j;
  j["method"] = std::string(to_string(r.method));
  j["ordering"] = ordering_name(r.ordering);
  j["ranking"] = r.ranking_line();
  j["top"] = top_label(r);
  j["alternatives"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    j["alternatives"].push_back({{"label", r.label(i)}, {"score", r.scores[i]}, {"rank", r.ranks[i]}});
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

inline std::string ranking_table(const RankingResult& r, const std::string& score_name) {
  std::vector<std::vector<std::string>> rows{{"alternative", score_name, "rank"}};
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    rows.push_back({r.label(i), fixed4(r.scores[i]), rank_text(r.ranks[i])});
  }
  return format_table(rows);
}

inline std::string ranking_csv(const RankingResult& r) {
  std::string out = "alternative,score,rank\n";
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    out += r.label(i) + "," + full(r.scores[i]) + "," + full(r.ranks[i]) + "\n";
  }
  return out;
}

inline std::string consistency_line(const ConsistencyReport& c) {
  return "lambda_max " + fixed4(c.lambda_max) + "  CI " + fixed4(c.ci) + "  CR " + fixed4(c.cr) +
         (c.acceptable ? "  (acceptable)" : "  (CR > 0.1: review judgments)");
}

inline nlohmann::json consistency_json(const ConsistencyReport& c) {
  return {{"lambda_max", c.lambda_max}, {"ci", c.ci}, {"ri", c.ri}, {"cr", c.cr},
          {"acceptable", c.acceptable}};
}

inline std::string matrix_table(const Matrix& m, const std::vector<std::string>& row_labels,
                                const std::vector<std::string>& col_labels) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  header.insert(header.end(), col_labels.begin(), col_labels.end());
  rows.push_back(header);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{row_labels[i]};
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(fixed4(m(i, j)));
    rows.push_back(std::move(r));
  }
  return format_table(rows);
}

inline nlohmann::json matrix_json(const Matrix& m) {
  auto j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    j.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return j;
}

inline std::string score_name(MethodId m) { return m == MethodId::Fuca ? "R" : "P"; }

}  // namespace detail

inline Report cmd_rank(const DecisionProblem& problem, MethodId method,
                       const MethodOptions& options = {}) {
  const auto result = run_method(method, problem, options);
  Report out;
  out.data = detail::ranking_json(result);
  out.data["command"] = "rank";
  out.data["problem"] = problem_to_json(problem);
  std::string title = std::string(to_string(method));
  std::transform(title.begin(), title.end(), title.begin(), ::toupper);
  if (method == MethodId::Waspas) title += " (lambda = " + detail::fixed4(options.lambda) + ")";
  out.table = title + "\n" + detail::ranking_table(result, detail::score_name(method)) +
              "ranking: " + result.ranking_line() + "\n";
  out.csv = detail::ranking_csv(result);
  return out;
}

/// Alternatives x methods table of ranks with a row naming each method's winner.
inline Report cmd_compare(const DecisionProblem& problem, std::span<const MethodId> methods,
                          const MethodOptions& options = {}) {
  std::vector<MethodId> unique;
  for (auto m : methods) {
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(m);
  }
  if (unique.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "compare needs at least two distinct methods");
  }
  std::vector<RankingResult> results;
  for (auto m : unique) results.push_back(run_method(m, problem, options));

  Report out;
  out.data["command"] = "compare";
  out.data["problem"] = problem_to_json(problem);
  out.data["methods"] = nlohmann::json::array();
  for (const auto& r : results) out.data["methods"].push_back(detail::ranking_json(r));

  std::vector<std::string> tops;
  for (const auto& r : results) tops.push_back(detail::top_label(r));
  const bool agree = std::all_of(tops.begin(), tops.end(), [&](const auto& t) { return t == tops.front(); });
  out.data["top"] = nlohmann::json::object();
  for (std::size_t k = 0; k < results.size(); ++k) out.data["top"][std::string(to_string(unique[k]))] = tops[k];
  out.data["consensus"] = agree ? nlohmann::json(tops.front()) : nlohmann::json(nullptr);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"alternative"};
  for (auto m : unique) header.emplace_back(to_string(m));
  rows.push_back(header);
  for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
    std::vector<std::string> r{problem.alternatives()[i]};
    for (const auto& res : results) r.push_back(detail::rank_text(res.ranks[i]));
    rows.push_back(std::move(r));
  }
  std::vector<std::string> top_row{"top"};
  top_row.insert(top_row.end(), tops.begin(), tops.end());
  rows.push_back(top_row);
  out.table = "Ranks by method\n" + detail::format_table(rows);
  out.table += agree ? "all methods agree on " + tops.front() + "\n"
                     : std::string("methods disagree on the top alternative\n");

  out.csv = "alternative";
  for (auto m : unique) out.csv += "," + std::string(to_string(m));
  out.csv += "\n";
  for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
    out.csv += problem.alternatives()[i];
    for (const auto& res : results) out.csv += "," + detail::full(res.ranks[i]);
    out.csv += "\n";
  }
  return out;
}

struct AhpCommandOptions {
  bool strict = false;
  bool weights_only = false;
  std::optional<MethodId> hybrid;
  MethodOptions method{};
};

/**
 * @brief AHP on a problem file.
 *
 * Criteria weights come from the `ahp` section's criteria matrix, else its
 * explicit weights, else the problem's own weights. Alternative matrices come
 * from the section or are derived from the values. `hybrid` feeds the weights
 * into another matrix method instead of the local-priority aggregation.
 */
inline Report cmd_ahp(const ProblemFile& file, const AhpCommandOptions& options = {}) {
  const AhpOptions ahp_options{options.strict, {}};
  std::vector<double> weights;
  std::optional<ConsistencyReport> criteria_report;
  std::optional<PairwiseMatrix> criteria_matrix;
  if (file.ahp && file.ahp->criteria_matrix) {
    criteria_matrix = file.ahp->criteria_matrix;
    auto cw = ahp_criteria_weights(*criteria_matrix, ahp_options);
    weights = std::move(cw.weights);
    criteria_report = cw.report;
  } else if (file.ahp && file.ahp->weights) {
    weights = *file.ahp->weights;
  } else if (file.problem) {
    weights = file.problem->weights();
  } else {
    throw Error(ErrorCode::MissingSection, "need an ahp.criteria_matrix, ahp.weights or a weighted problem");
  }
  if (weights.size() != file.criteria.size()) {
    throw Error(ErrorCode::DimensionMismatch, "weight count does not match the criteria");
  }

  Report out;
  out.data["command"] = "ahp";
  out.data["criteria"] = file.criteria;
  out.data["weights"] = weights;
  out.table = "Criteria weights\n";
  {
    std::vector<std::vector<std::string>> rows{{"criterion", "weight"}};
    for (std::size_t j = 0; j < weights.size(); ++j) rows.push_back({file.criteria[j], detail::fixed4(weights[j])});
    out.table += detail::format_table(rows);
  }
  if (criteria_report) {
    out.data["criteria_consistency"] = detail::consistency_json(*criteria_report);
    out.table += detail::consistency_line(*criteria_report) + "\n";
    if (!criteria_report->acceptable) out.warnings.push_back("criteria matrix CR exceeds 0.1");
  }
  out.csv = "criterion,weight\n";
  for (std::size_t j = 0; j < weights.size(); ++j) out.csv += file.criteria[j] + "," + detail::full(weights[j]) + "\n";
  if (options.weights_only) return out;

  if (options.hybrid) {
    if (!file.problem) throw Error(ErrorCode::MissingSection, "--hybrid needs alternative values");
    const auto weighted = validate_problem(file.problem->with_weights(weights));
    const auto result = run_method(*options.hybrid, weighted, options.method);
    out.data["hybrid"] = detail::ranking_json(result);
    out.data["problem"] = problem_to_json(weighted);
    out.table += "\nAHP weights + " + std::string(to_string(*options.hybrid)) + "\n" +
                 detail::ranking_table(result, detail::score_name(*options.hybrid)) +
                 "ranking: " + result.ranking_line() + "\n";
    out.csv = detail::ranking_csv(result);
    return out;
  }

  AhpModel model{weights, DeriveFromProblem{}};
  if (criteria_matrix) model.criteria = *criteria_matrix;
  if (file.ahp && file.ahp->alternative_matrices) model.alternatives = *file.ahp->alternative_matrices;
  const DecisionProblem* problem = file.problem ? &*file.problem : nullptr;
  const auto local = ahp_local_priorities(model, problem, ahp_options);
  auto ranking = ahp_rank(weights, local.values);
  ranking.alternatives = file.alternatives;
  if (criteria_report) {
    ranking.diagnostics["lambda_max"] = criteria_report->lambda_max;
    ranking.diagnostics["ci"] = criteria_report->ci;
    ranking.diagnostics["cr"] = criteria_report->cr;
  }

  out.data["local_priorities"] = detail::matrix_json(local.values);
  out.data["local_consistency"] = nlohmann::json::array();
  out.table += "\nLocal priorities\n" + detail::matrix_table(local.values, file.alternatives, file.criteria);
  for (std::size_t j = 0; j < local.reports.size(); ++j) {
    out.data["local_consistency"].push_back(detail::consistency_json(local.reports[j]));
    out.table += file.criteria[j] + ": " + detail::consistency_line(local.reports[j]) + "\n";
    if (!local.reports[j].acceptable) {
      out.warnings.push_back("alternative matrix under " + file.criteria[j] + " has CR > 0.1");
    }
  }
  out.data["global"] = detail::ranking_json(ranking);
  if (file.problem) out.data["problem"] = problem_to_json(*file.problem);
  out.table += "\nGlobal priorities\n" + detail::ranking_table(ranking, "P") +
               "ranking: " + ranking.ranking_line() + "\n";
  out.csv = detail::ranking_csv(ranking);
  out.data["warnings"] = out.warnings;
  return out;
}

inline Report cmd_anp(const ProblemFile& file, bool strict = false) {
  if (!file.anp) throw Error(ErrorCode::MissingSection, "file has no anp section");
  const auto& section = *file.anp;
  AnpOptions options;
  options.strict = strict;
  const auto result = anp_priorities(section.network, section.goal, section.alternatives_cluster, options);
  const auto& nodes = section.network.nodes();

  Report out;
  out.data["command"] = "anp";
  out.data["nodes"] = nodes;
  out.data["weighted_supermatrix"] = detail::matrix_json(result.weighted.matrix.matrix());
  out.data["limit_supermatrix"] = detail::matrix_json(result.limit.matrix.matrix());
  out.data["priorities"] = detail::ranking_json(result.ranking);
  out.data["block_consistency"] = nlohmann::json::array();
  out.table = "Weighted supermatrix\n" + detail::matrix_table(result.weighted.matrix.matrix(), nodes, nodes);
  out.table += "\nLimit supermatrix\n" + detail::matrix_table(result.limit.matrix.matrix(), nodes, nodes);
  out.table += "\nBlock consistency\n";
  for (const auto& b : result.reports) {
    auto j = detail::consistency_json(b.report);
    j["parent"] = b.parent;
    j["cluster"] = b.cluster;
    out.data["block_consistency"].push_back(j);
    out.table += b.parent + " -> " + b.cluster + ": " + detail::consistency_line(b.report) + "\n";
    if (!b.report.acceptable) out.warnings.push_back("block " + b.parent + " -> " + b.cluster + " has CR > 0.1");
  }
  out.table += "\nAlternative priorities\n" + detail::ranking_table(result.ranking, "P") +
               "ranking: " + result.ranking.ranking_line() + "\n";
  out.csv = detail::ranking_csv(result.ranking);
  out.data["warnings"] = out.warnings;
  return out;
}

/// Parses "A:B:STEP" into A, A+STEP, ... up to B (inclusive within 1e-9).
inline std::vector<double> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "grid '" + std::string(spec) + "' is not START:STOP:STEP");
  }
  const auto lo = parse_number(spec.substr(0, first));
  const auto hi = parse_number(spec.substr(first + 1, second - first - 1));
  const auto step = parse_number(spec.substr(second + 1));
  if (!lo || !hi || !step) {
    throw Error(ErrorCode::ParseError, "grid '" + std::string(spec) + "' has a non-numeric part");
  }
  if (!(*step > 0.0)) throw Error(ErrorCode::ParseError, "grid step must be positive");
  if (*hi < *lo) throw Error(ErrorCode::ParseError, "grid stop is below its start");
  for (double v : {*lo, *hi}) detail::require_lambda(v);
  const auto count = static_cast<std::size_t>(std::floor((*hi - *lo) / *step + 1e-9)) + 1;
  std::vector<double> grid;
  for (std::size_t k = 0; k < count; ++k) {
    double v = *lo + static_cast<double>(k) * *step;
    // snap accumulated rounding (0.30000000000000004) back onto the decimal grid
    const double snapped = std::round(v * 1e9) / 1e9;
    if (std::abs(v - snapped) < 1e-12) v = snapped;
    grid.push_back(std::min(v, *hi));
  }
  return grid;
}

/// Lambda vs per-alternative WASPAS score and rank; flags rows whose ranking differs from the previous row.
inline Report cmd_waspas_sweep(const DecisionProblem& problem, std::span<const double> lambdas) {
  const auto results = waspas_sweep(problem, lambdas);
  Report out;
  out.data["command"] = "waspas-sweep";
  out.data["problem"] = problem_to_json(problem);
  out.data["rows"] = nlohmann::json::array();
  out.data["rank_changes"] = nlohmann::json::array();

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"lambda"};
  for (const auto& a : problem.alternatives()) header.push_back(a);
  header.emplace_back("ranking");
  header.emplace_back("change");
  rows.push_back(header);

  out.csv = "lambda";
  for (const auto& a : problem.alternatives()) out.csv += "," + a + "_score," + a + "_rank";
  out.csv += ",changed\n";

  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    const bool changed = k > 0 && r.ranks != results[k - 1].ranks;
    auto row = detail::ranking_json(r);
    row["lambda"] = lambdas[k];
    row["rank_changed"] = changed;
    out.data["rows"].push_back(row);
    if (changed) out.data["rank_changes"].push_back(lambdas[k]);

    std::vector<std::string> t{detail::fixed4(lambdas[k])};
    for (std::size_t i = 0; i < r.scores.size(); ++i) {
      t.push_back(detail::fixed4(r.scores[i]) + " (" + detail::rank_text(r.ranks[i]) + ")");
    }
    t.push_back(r.ranking_line());
    t.emplace_back(changed ? "*" : "");
    rows.push_back(std::move(t));

    out.csv += detail::full(lambdas[k]);
    for (std::size_t i = 0; i < r.scores.size(); ++i) {
      out.csv += "," + detail::full(r.scores[i]) + "," + detail::full(r.ranks[i]);
    }
    out.csv += changed ? ",1\n" : ",0\n";
  }
  out.table = "WASPAS lambda sweep\n" + detail::format_table(rows);
  out.table += out.data["rank_changes"].empty()
                   ? std::string("ranking is stable across the grid\n")
                   : "ranking changes at lambda = " + out.data["rank_changes"].dump() + "\n";
  return out;
}

}  // namespace mcdm

#endif  // MCDM_COMMANDS_HPP
