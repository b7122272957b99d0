/**
 * @file io.hpp
 * @brief Reading decision problems, AHP models and ANP networks from CSV or JSON.
 *
 * CSV holds a flat problem:
 *
 *     alternative,C1,C2,C3
 *     direction,max,max,min
 *     weight,0.25,0.33,0.42
 *     A1,0.93,600,8.25
 *
 * JSON holds the same problem plus optional `ahp` and `anp` sections; see
 * README.md for the schema. Pairwise judgments are upper-triangle triples
 * `[row, col, value]` naming items by label or 1-based index, with values
 * given as numbers or fraction strings such as "1/3".
 */

#ifndef MCDM_IO_HPP
#define MCDM_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcdm/anp.hpp"
#include "mcdm/core.hpp"
#include "mcdm/pairwise.hpp"

namespace mcdm {

enum class InputFormat { Auto, Csv, Json };

struct AhpSection {
  std::optional<PairwiseMatrix> criteria_matrix;
  std::optional<std::vector<double>> weights;
  /// One matrix per criterion in criterion order; absent means "derive from values".
  std::optional<std::vector<PairwiseMatrix>> alternative_matrices;
};

struct AnpSection {
  AnpNetwork network;
  std::string goal;
  std::string alternatives_cluster;
};

struct ProblemFile {
  std::optional<DecisionProblem> problem;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::optional<AhpSection> ahp;
  std::optional<AnpSection> anp;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline std::optional<double> parse_decimal(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses "0.25", "3" or a fraction such as "1/3".
inline std::optional<double> parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return detail::parse_decimal(text);
  auto num = detail::parse_decimal(text.substr(0, slash));
  auto den = detail::parse_decimal(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

inline std::optional<Direction> parse_direction(std::string_view text) {
  const auto t = detail::lower(detail::trim(text));
  if (t == "max" || t == "maximize" || t == "benefit") return Direction::Maximize;
  if (t == "min" || t == "minimize" || t == "cost") return Direction::Minimize;
  return std::nullopt;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace detail

inline ProblemFile parse_problem_csv(std::string_view text, IngestOptions options = {}) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    rows.emplace_back(line_no, detail::split_csv_line(t));
  }
  if (rows.size() < 3) {
    detail::parse_fail("csv", "expected header, direction and weight rows before the values");
  }

  const auto& header = rows[0].second;
  const std::size_t n = header.size() - 1;
  if (n == 0) detail::parse_fail("line " + std::to_string(rows[0].first), "no criteria in header");
  for (const auto& [ln, cells] : rows) {
    if (cells.size() != n + 1) {
      detail::parse_fail("line " + std::to_string(ln),
                         "expected " + std::to_string(n + 1) + " cells, found " +
                             std::to_string(cells.size()));
    }
  }
  auto cell_where = [&](std::size_t r, std::size_t c) {
    return "line " + std::to_string(rows[r].first) + ", column " + std::to_string(c + 1) + " (" +
           header[c] + ")";
  };

  if (detail::lower(rows[1].second[0]) != "direction") {
    detail::parse_fail("line " + std::to_string(rows[1].first), "second row must be 'direction'");
  }
  if (detail::lower(rows[2].second[0]) != "weight") {
    detail::parse_fail("line " + std::to_string(rows[2].first), "third row must be 'weight'");
  }

  std::vector<CriterionSpec> criteria;
  for (std::size_t c = 1; c <= n; ++c) {
    auto dir = parse_direction(rows[1].second[c]);
    if (!dir) detail::parse_fail(cell_where(1, c), "'" + rows[1].second[c] + "' is not max/min");
    auto w = parse_number(rows[2].second[c]);
    if (!w) detail::parse_fail(cell_where(2, c), "'" + rows[2].second[c] + "' is not a number");
    criteria.push_back({header[c], *dir, *w});
  }

  std::vector<std::string> alternatives;
  Matrix values(rows.size() - 3, n);
  for (std::size_t r = 3; r < rows.size(); ++r) {
    alternatives.push_back(rows[r].second[0]);
    for (std::size_t c = 1; c <= n; ++c) {
      auto v = parse_number(rows[r].second[c]);
      if (!v) detail::parse_fail(cell_where(r, c), "'" + rows[r].second[c] + "' is not a number");
      values(r - 3, c - 1) = *v;
    }
  }

  ProblemFile out;
  out.problem = validate_problem(DecisionProblem(alternatives, criteria, std::move(values)), options);
  out.alternatives = std::move(alternatives);
  for (const auto& c : criteria) out.criteria.push_back(c.label);
  return out;
}

namespace detail {

using nlohmann::json;

inline const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

inline double as_number(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    if (auto v = parse_number(j.get<std::string>())) return *v;
    parse_fail(path, "'" + j.get<std::string>() + "' is not a number");
  }
  parse_fail(path, "expected a number");
}

inline std::vector<std::string> as_labels(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(as_string(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

inline std::size_t item_index(const json& j, const std::vector<std::string>& labels,
                              const std::string& path) {
  if (j.is_number_integer()) {
    const auto k = j.get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > labels.size()) {
      parse_fail(path, "index " + std::to_string(k) + " outside 1.." + std::to_string(labels.size()));
    }
    return static_cast<std::size_t>(k - 1);
  }
  const auto name = as_string(j, path);
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) parse_fail(path, "unknown item '" + name + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

inline PairwiseMatrix parse_pairwise(const json& j, const std::vector<std::string>& labels,
                                     const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of [row, col, value] triples");
  std::vector<Comparison> judgments;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto p = path + "[" + std::to_string(k) + "]";
    const auto& t = j[k];
    if (!t.is_array() || t.size() != 3) parse_fail(p, "expected [row, col, value]");
    judgments.push_back({item_index(t[0], labels, p + "[0]"), item_index(t[1], labels, p + "[1]"),
                         as_number(t[2], p + "[2]")});
  }
  return build_pairwise(labels.size(), judgments, labels);
}

inline AnpSection parse_anp(const json& j, const std::string& path) {
  std::vector<Cluster> clusters;
  const auto& cj = require(j, "clusters", path);
  if (!cj.is_array()) parse_fail(path + ".clusters", "expected an array");
  for (std::size_t k = 0; k < cj.size(); ++k) {
    const auto p = path + ".clusters[" + std::to_string(k) + "]";
    clusters.push_back({as_string(require(cj[k], "label", p), p + ".label"),
                        as_labels(require(cj[k], "nodes", p), p + ".nodes")});
  }
  std::vector<std::string> nodes;
  if (j.contains("nodes")) nodes = as_labels(j["nodes"], path + ".nodes");

  std::vector<InfluenceBlock> blocks;
  if (j.contains("influence_blocks")) {
    const auto& bj = j["influence_blocks"];
    if (!bj.is_array()) parse_fail(path + ".influence_blocks", "expected an array");
    for (std::size_t k = 0; k < bj.size(); ++k) {
      const auto p = path + ".influence_blocks[" + std::to_string(k) + "]";
      auto parent = as_string(require(bj[k], "parent", p), p + ".parent");
      auto cluster = as_string(require(bj[k], "cluster", p), p + ".cluster");
      auto children = as_labels(require(bj[k], "children", p), p + ".children");
      const auto comparisons =
          bj[k].contains("comparisons") ? bj[k]["comparisons"] : json::array();
      blocks.push_back({std::move(parent), std::move(cluster),
                        parse_pairwise(comparisons, children, p + ".comparisons")});
    }
  }

  ClusterSplits splits;
  if (j.contains("cluster_splits")) {
    const auto& sj = j["cluster_splits"];
    if (!sj.is_object()) parse_fail(path + ".cluster_splits", "expected an object");
    for (const auto& [parent, shares] : sj.items()) {
      const auto p = path + ".cluster_splits." + parent;
      if (!shares.is_object()) parse_fail(p, "expected an object of cluster shares");
      for (const auto& [cluster, w] : shares.items()) {
        splits[parent][cluster] = as_number(w, p + "." + cluster);
      }
    }
  }

  return {AnpNetwork(std::move(clusters), std::move(nodes), std::move(blocks), std::move(splits)),
          as_string(require(j, "goal", path), path + ".goal"),
          as_string(require(j, "alternatives_cluster", path), path + ".alternatives_cluster")};
}

}  // namespace detail

inline ProblemFile parse_problem_json(std::string_view text, IngestOptions options = {}) {
  using detail::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    detail::parse_fail("json", e.what());
  }
  if (!root.is_object()) detail::parse_fail("$", "top level must be an object");

  ProblemFile out;
  std::vector<CriterionSpec> criteria;
  bool full_criteria = true;
  if (root.contains("alternatives")) out.alternatives = detail::as_labels(root["alternatives"], "$.alternatives");
  if (root.contains("criteria")) {
    const auto& cj = root["criteria"];
    if (!cj.is_array()) detail::parse_fail("$.criteria", "expected an array");
    for (std::size_t k = 0; k < cj.size(); ++k) {
      const auto p = "$.criteria[" + std::to_string(k) + "]";
      if (cj[k].is_string()) {
        out.criteria.push_back(cj[k].get<std::string>());
        full_criteria = false;
        continue;
      }
      CriterionSpec spec;
      spec.label = detail::as_string(detail::require(cj[k], "label", p), p + ".label");
      const auto dir = detail::as_string(detail::require(cj[k], "direction", p), p + ".direction");
      auto parsed = parse_direction(dir);
      if (!parsed) detail::parse_fail(p + ".direction", "'" + dir + "' is not max/min");
      spec.direction = *parsed;
      spec.weight = detail::as_number(detail::require(cj[k], "weight", p), p + ".weight");
      out.criteria.push_back(spec.label);
      criteria.push_back(std::move(spec));
    }
  }

  if (root.contains("values")) {
    if (!full_criteria) {
      detail::parse_fail("$.criteria", "a problem with values needs label/direction/weight objects");
    }
    const auto& vj = root["values"];
    if (!vj.is_array()) detail::parse_fail("$.values", "expected an array of rows");
    if (vj.size() != out.alternatives.size()) {
      detail::parse_fail("$.values", std::to_string(vj.size()) + " rows for " +
                                         std::to_string(out.alternatives.size()) + " alternatives");
    }
    Matrix values(vj.size(), criteria.size());
    for (std::size_t i = 0; i < vj.size(); ++i) {
      const auto p = "$.values[" + std::to_string(i) + "]";
      if (!vj[i].is_array() || vj[i].size() != criteria.size()) {
        detail::parse_fail(p, "expected " + std::to_string(criteria.size()) + " values");
      }
      for (std::size_t c = 0; c < criteria.size(); ++c) {
        values(i, c) = detail::as_number(vj[i][c], p + "[" + std::to_string(c) + "]");
      }
    }
    out.problem =
        validate_problem(DecisionProblem(out.alternatives, criteria, std::move(values)), options);
  }

  if (root.contains("ahp")) {
    const auto& aj = root["ahp"];
    if (!aj.is_object()) detail::parse_fail("$.ahp", "expected an object");
    AhpSection ahp;
    if (aj.contains("criteria_matrix")) {
      ahp.criteria_matrix = detail::parse_pairwise(aj["criteria_matrix"], out.criteria, "$.ahp.criteria_matrix");
    }
    if (aj.contains("weights")) {
      const auto& wj = aj["weights"];
      if (!wj.is_array()) detail::parse_fail("$.ahp.weights", "expected an array");
      std::vector<double> w;
      for (std::size_t k = 0; k < wj.size(); ++k) {
        w.push_back(detail::as_number(wj[k], "$.ahp.weights[" + std::to_string(k) + "]"));
      }
      ahp.weights = std::move(w);
    }
    if (aj.contains("alternative_matrices")) {
      const auto& mj = aj["alternative_matrices"];
      if (!mj.is_object()) detail::parse_fail("$.ahp.alternative_matrices", "expected an object keyed by criterion");
      std::vector<PairwiseMatrix> matrices;
      for (const auto& c : out.criteria) {
        const auto p = "$.ahp.alternative_matrices." + c;
        if (!mj.contains(c)) detail::parse_fail(p, "missing matrix for criterion '" + c + "'");
        matrices.push_back(detail::parse_pairwise(mj[c], out.alternatives, p));
      }
      if (mj.size() != out.criteria.size()) {
        detail::parse_fail("$.ahp.alternative_matrices", "has matrices for unknown criteria");
      }
      ahp.alternative_matrices = std::move(matrices);
    }
    out.ahp = std::move(ahp);
  }

  if (root.contains("anp")) out.anp = detail::parse_anp(root["anp"], "$.anp");
  return out;
}

inline ProblemFile parse_problem(std::string_view text, InputFormat format, IngestOptions options = {}) {
  if (format == InputFormat::Auto) {
    const auto t = detail::trim(text);
    format = !t.empty() && t.front() == '{' ? InputFormat::Json : InputFormat::Csv;
  }
  return format == InputFormat::Json ? parse_problem_json(text, options)
                                     : parse_problem_csv(text, options);
}

/// Reads a problem file; Auto picks the format from the extension (.json / .csv).
inline ProblemFile load_problem(const std::filesystem::path& path, InputFormat format = InputFormat::Auto,
                                IngestOptions options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (format == InputFormat::Auto) {
    const auto ext = detail::lower(path.extension().string());
    if (ext == ".json") format = InputFormat::Json;
    else if (ext == ".csv") format = InputFormat::Csv;
  }
  return parse_problem(buffer.str(), format, options);
}

/// The problem in the JSON input schema; parse_problem_json reads it back unchanged.
inline nlohmann::json problem_to_json(const DecisionProblem& problem) {
  nlohmann::json j;
  j["alternatives"] = problem.alternatives();
  j["criteria"] = nlohmann::json::array();
  for (const auto& c : problem.criteria()) {
    j["criteria"].push_back(
        {{"label", c.label}, {"direction", std::string(to_string(c.direction))}, {"weight", c.weight}});
  }
  j["values"] = nlohmann::json::array();
  for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
    const auto row = problem.values().row(i);
    j["values"].push_back(std::vector<double>(row.begin(), row.end()));
  }
  return j;
}

}  // namespace mcdm

#endif  // MCDM_IO_HPP
