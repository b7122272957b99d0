#include "support.hpp"

using namespace mcdm;
using Catch::Matchers::ContainsSubstring;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected mcdm::Error");
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("bundled CSV fixtures load", "[io]") {
  const auto t = support::fixture("sample.csv");
  REQUIRE(t.problem);
  CHECK(t.problem->num_alternatives() == 4);
  CHECK(t.problem->weights() == std::vector<double>{0.25, 0.33, 0.42});
  CHECK(t.problem->value(0, 2) == 8.25);
  CHECK(t.problem->criteria()[2].direction == Direction::Minimize);

  const auto e = support::problem("exercise1.csv");
  CHECK(e.num_alternatives() == 3);
  CHECK(e.weights() == std::vector<double>{0.30, 0.25, 0.20, 0.25});
}

TEST_CASE("number parsing accepts decimals and fractions", "[io]") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number(" 1/3 ") == 1.0 / 3);
  CHECK(parse_number("+2") == 2.0);
  CHECK_FALSE(parse_number("1/0").has_value());
  CHECK_FALSE(parse_number("abc").has_value());
  CHECK_FALSE(parse_number("").has_value());
  CHECK(parse_direction("Benefit") == Direction::Maximize);
  CHECK(parse_direction("cost") == Direction::Minimize);
}

TEST_CASE("CSV errors name line and column", "[io]") {
  const auto e = error_of([] {
    parse_problem_csv("alternative,C1,C2\ndirection,max,min\nweight,0.5,0.5\nA1,1,x\n");
  });
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK_THAT(std::string(e.what()), ContainsSubstring("line 4") && ContainsSubstring("column 3"));

  CHECK(error_of([] { parse_problem_csv("alternative,C1\ndirection,up\nweight,1\nA1,1\n"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_problem_csv("alternative,C1\ndirection,max\nweight,1\nA1,1,2\n"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_problem_csv("alternative,C1\ndirection,max\nweight,0.9\nA1,1\n"); }).code() ==
        ErrorCode::WeightSumError);
  CHECK(error_of([] { parse_problem_csv("alternative,C1\ndirection,max\nweight,1\nA1,0\n"); }).code() ==
        ErrorCode::NonPositiveValue);
  CHECK_NOTHROW(parse_problem_csv("# note\n\nalternative,C1\ndirection,max\nweight,1\nA1,3\n"));
}

TEST_CASE("JSON problems, AHP and ANP sections", "[io]") {
  const auto a = support::fixture("ahp_sample.json");
  REQUIRE(a.problem);
  REQUIRE(a.ahp);
  REQUIRE(a.ahp->criteria_matrix);
  CHECK((*a.ahp->criteria_matrix)(1, 0) == 1.0 / 3);
  REQUIRE(a.ahp->alternative_matrices);
  CHECK(a.ahp->alternative_matrices->size() == 3);
  CHECK((*a.ahp->alternative_matrices)[2](0, 3) == 1.0 / 9);

  const auto n = support::fixture("anp_sample.json");
  CHECK_FALSE(n.problem.has_value());
  REQUIRE(n.anp);
  CHECK(n.anp->goal == "G");
  CHECK(n.anp->network.nodes().size() == 6);

  const auto weights_only = parse_problem_json(
      R"({"criteria": ["C1", "C2"], "ahp": {"criteria_matrix": [[1, 2, "1/3"]]}})");
  CHECK_FALSE(weights_only.problem);
  CHECK((*weights_only.ahp->criteria_matrix)(0, 1) == 1.0 / 3);
}

TEST_CASE("JSON errors carry a path", "[io]") {
  auto e = error_of([] { parse_problem_json(R"({"alternatives": ["A1"], "criteria": [{"label": "C1", "direction": "max", "weight": 1}], "values": [["q"]]})"); });
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK_THAT(std::string(e.what()), ContainsSubstring("$.values[0][0]"));
  e = error_of([] { parse_problem_json("{not json"); });
  CHECK(e.code() == ErrorCode::ParseError);
  e = error_of([] { parse_problem_json(R"({"criteria": ["C1", "C2"], "ahp": {"criteria_matrix": [["C1", "C9", 2]]}})"); });
  CHECK(e.code() == ErrorCode::ParseError);
  e = error_of([] { parse_problem_json(R"({"criteria": ["C1", "C2"], "ahp": {"criteria_matrix": [["C1", "C2", 20]]}})"); });
  CHECK(e.code() == ErrorCode::ScaleViolation);
  e = error_of([] {
    parse_problem_json(R"({"anp": {"clusters": [{"label": "c", "nodes": ["C1"]}, {"label": "a", "nodes": ["A1", "A2"]}],
      "influence_blocks": [{"parent": "C1", "cluster": "a", "children": ["A1", "A2"], "comparisons": [["A1", "A2", 2]]},
                           {"parent": "C1", "cluster": "c", "children": ["C1"]}],
      "cluster_splits": {"C1": {"a": 0.5, "c": 0.4}}, "goal": "C1", "alternatives_cluster": "a"}})");
  });
  CHECK(e.code() == ErrorCode::InvalidNetwork);
  CHECK(e.category() == ErrorCategory::Validation);
}

TEST_CASE("problem echo round-trips", "[io]") {
  for (const char* name : {"sample.csv", "exercise1.csv", "exercise2.csv", "exercise3.csv", "ahp_sample.json"}) {
    const auto p = support::problem(name);
    const auto text = problem_to_json(p).dump();
    CHECK(*parse_problem_json(text).problem == p);
  }
}

TEST_CASE("format detection", "[io]") {
  const std::string csv = "alternative,C1\ndirection,max\nweight,1\nA1,3\n";
  CHECK(parse_problem(csv, InputFormat::Auto).problem->value(0, 0) == 3.0);
  const auto json = problem_to_json(*parse_problem(csv, InputFormat::Csv).problem).dump();
  CHECK(parse_problem("  " + json, InputFormat::Auto).problem->value(0, 0) == 3.0);
  CHECK(error_of([] { load_problem("/nonexistent/file.csv"); }).code() == ErrorCode::ParseError);
}
