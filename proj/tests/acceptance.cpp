// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcdm/mcdm.hpp"
#include "properties.hpp"
#include "random_problems.hpp"
#include "reference.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void near(const std::string& what, double got, double want, double tol) {
    const double d = std::abs(got - want);
    if (!(d <= tol)) fail(what + ": got " + num(got) + ", want " + num(want) + " +/- " + num(tol));
    worst_ = std::max(worst_, d / tol);
  }
  void near(const std::string& what, const std::vector<double>& got, const std::vector<double>& want, double tol) {
    if (got.size() != want.size()) {
      fail(what + ": size mismatch");
      return;
    }
    for (std::size_t i = 0; i < got.size(); ++i) near(what + "[" + std::to_string(i + 1) + "]", got[i], want[i], tol);
  }
  void equal(const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) fail(what + ": got \"" + got + "\", want \"" + want + "\"");
  }
  void truth(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& msg) {
    if (out_.pass) out_.detail = msg;
    out_.pass = false;
  }
  Outcome done() {
    if (out_.pass && out_.detail.empty()) out_.detail = "worst deviation " + num(worst_) + " of tolerance";
    return out_;
  }
  void note(const std::string& msg) {
    if (out_.pass) out_.detail = msg;
  }

  static std::string num(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
  }

 private:
  Outcome out_;
  double worst_ = 0.0;
};

std::string data_path(const char* name) { return std::string(MCDM_DATA_DIR) + "/" + name; }

mcdm::DecisionProblem table() { return *mcdm::load_problem(data_path("sample.csv")).problem; }

std::vector<double> column(const mcdm::Matrix& m, std::size_t j) { return m.column(j); }

std::vector<double> row(const mcdm::Matrix& m, std::size_t i) {
  const auto r = m.row(i);
  return {r.begin(), r.end()};
}

mcdm::PairwiseMatrix criteria_matrix() {
  return mcdm::PairwiseMatrix(mcdm::SquareMatrix{{1, 3, 5}, {1.0 / 3, 1, 4}, {1.0 / 5, 1.0 / 4, 1}},
                              {"C1", "C2", "C3"});
}

Outcome saw_golden() {
  Checker c;
  const auto p = table();
  const auto f = mcdm::normalize_max(p);
  const auto v = mcdm::apply_weights(f, p.weights());
  for (std::size_t i = 0; i < 4; ++i) {
    c.near("normalized row " + std::to_string(i + 1), row(f.values, i), reference::kMaxNormalized[i], 5e-4);
    c.near("weighted row " + std::to_string(i + 1), row(v.values, i), reference::kSawWeighted[i], 5e-4);
  }
  const auto r = mcdm::saw(p);
  c.near("P", r.scores, reference::kSaw, 5e-4);
  c.equal("ranking", r.ranking_line(), "A3 > A4 > A1 > A2");
  return c.done();
}

Outcome mew_golden() {
  Checker c;
  const auto r = mcdm::mew(table());
  c.near("P", r.scores, reference::kMew, 5e-4);
  c.equal("ranking", r.ranking_line(), "A3 > A4 > A2 > A1");
  return c.done();
}

Outcome ahp_weights_golden() {
  Checker c;
  const auto cw = mcdm::ahp_criteria_weights(criteria_matrix());
  c.near("lambda_max", cw.report.lambda_max, 3.086, 1e-3);
  c.near("weights", cw.weights, reference::kCriteriaWeights, 5e-4);
  c.near("CI", cw.report.ci, 0.0429, 5e-4);
  c.near("CR", cw.report.cr, 0.074, 1e-3);
  return c.done();
}

Outcome ahp_mapping_golden() {
  Checker c;
  const auto p = table();
  c.near("a_13 under C1", mcdm::acm_to_pairwise(p, 0)(0, 2), 3.5140, 5e-4);
  c.near("a_12 under C2", mcdm::acm_to_pairwise(p, 1)(0, 1), 0.3121, 5e-4);
  c.near("a_14 under C3", mcdm::acm_to_pairwise(p, 2)(0, 3), 0.1111, 5e-4);
  const auto local = mcdm::ahp_local_priorities(mcdm::AhpModel{criteria_matrix(), mcdm::DeriveFromProblem{}}, &p);
  for (std::size_t i = 0; i < 4; ++i) {
    c.near("local priorities " + p.alternatives()[i], row(local.values, i), reference::kLocalPriorities[i], 5e-4);
  }
  for (std::size_t j = 0; j < 3; ++j) c.near("CR " + p.criteria()[j].label, local.reports[j].cr, reference::kLocalCr[j], 2e-3);

  // full published matrices, reported for information
  double worst = 0.0;
  std::string where;
  for (std::size_t j = 0; j < 3; ++j) {
    const auto m = mcdm::acm_to_pairwise(p, j);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) {
        const double d = std::abs(m(i, k) - reference::kMappedMatrices[j][i][k]);
        if (d > worst) {
          worst = d;
          where = p.criteria()[j].label + " (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
        }
      }
  }
  const auto out = c.done();
  if (out.pass) {
    return {true, "spot set, priorities and CRs within tolerance; largest full-table entry deviation " +
                      Checker::num(worst) + " at " + where};
  }
  return out;
}

Outcome ahp_global_golden() {
  Checker c;
  const auto p = table();
  const auto r = mcdm::ahp(mcdm::AhpModel{criteria_matrix(), mcdm::DeriveFromProblem{}}, &p);
  c.near("P", r.ranking.scores, reference::kAhpGlobal, 1e-3);
  c.near("P vs software", r.ranking.scores, reference::kAhpGlobalSoftware, 1e-3);
  c.equal("ranking", r.ranking.ranking_line(), "A1 > A4 > A2 > A3");
  return c.done();
}

Outcome anp_golden() {
  Checker c;
  const auto file = mcdm::load_problem(data_path("anp_sample.json"));
  const auto r = mcdm::anp_priorities(file.anp->network, file.anp->goal, file.anp->alternatives_cluster);
  for (std::size_t i = 0; i < 6; ++i) {
    c.near("weighted row " + r.weighted.nodes[i], row(r.weighted.matrix.matrix(), i),
           reference::kWeightedSupermatrix[i], 5e-4);
  }
  for (std::size_t j = 0; j < 6; ++j) {
    c.near("limit column " + r.limit.nodes[j], column(r.limit.matrix.matrix(), j), reference::kLimitColumn, 1e-3);
  }
  c.near("priorities", r.ranking.scores, reference::kAnpPriorities, 1e-3);
  return c.done();
}

Outcome copras_golden() {
  Checker c;
  const auto p = table();
  const auto w = mcdm::apply_weights(mcdm::normalize_sum(p), p.weights());
  const auto s = mcdm::split_sums(w, w.directions);
  c.near("S+", s.s_plus, reference::kCoprasSPlus, 5e-4);
  c.near("S-", s.s_minus, reference::kCoprasSMinus, 5e-4);
  const auto r = mcdm::copras(p);
  c.near("P", r.scores, reference::kCopras, 5e-4);
  c.equal("ranking", r.ranking_line(), "A3 > A4 > A1 > A2");
  return c.done();
}

Outcome moora_golden() {
  Checker c;
  const auto r = mcdm::moora(table());
  c.near("P", r.scores, reference::kMoora, 5e-4);
  c.equal("ranking", r.ranking_line(), "A3 > A4 > A2 > A1");
  return c.done();
}

Outcome fuca_golden() {
  Checker c;
  const auto p = table();
  const auto ranks = mcdm::criterion_ranks(p);
  for (std::size_t i = 0; i < 4; ++i)
    c.truth("rank matrix row " + std::to_string(i + 1), row(ranks, i) == reference::kFucaRanks[i]);
  const auto r = mcdm::fuca(p);
  c.near("R", r.scores, reference::kFuca, 1e-9);
  c.equal("ranking", r.ranking_line(), "A4 > A3 > A1 = A2");
  return c.done();
}

Outcome waspas_golden() {
  Checker c;
  const auto p = table();
  c.near("P(0.5)", mcdm::waspas(p, 0.5).scores, reference::kWaspasHalf, 5e-4);
  c.near("P(1) vs SAW", mcdm::waspas(p, 1.0).scores, mcdm::saw(p).scores, 1e-12);
  c.near("P(0) vs MEW", mcdm::waspas(p, 0.0).scores, mcdm::mew(p).scores, 1e-12);
  return c.done();
}

Outcome compare_tops() {
  Checker c;
  const auto report = mcdm::cmd_compare(table(), mcdm::kMatrixMethods);
  for (const char* m : {"saw", "mew", "copras", "moora", "waspas"}) {
    c.equal(std::string("top ") + m, report.data["top"][m].get<std::string>(), "A3");
  }
  c.equal("top fuca", report.data["top"]["fuca"].get<std::string>(), "A4");
  return c.done();
}

Outcome property_suite() {
  Checker c;
  std::vector<mcdm::DecisionProblem> problems;
  for (const char* name : {"exercise1.csv", "exercise2.csv", "exercise3.csv"}) {
    problems.push_back(*mcdm::load_problem(data_path(name)).problem);
  }
  const auto random = random_problems::sample();
  problems.insert(problems.end(), random.begin(), random.end());
  std::size_t checks = 0;
  for (const auto& [label, check] : properties::problem_checks()) {
    for (std::size_t k = 0; k < problems.size(); ++k) {
      ++checks;
      const auto msg = check(problems[k]);
      if (!msg.empty()) c.fail(label + " on problem " + std::to_string(k) + ": " + msg);
    }
  }
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> logv(-std::log(9.0), std::log(9.0));
  std::uniform_int_distribution<std::size_t> order(2, 10);
  std::uniform_real_distribution<double> raw(1.0, 3.0);
  for (int k = 0; k < 500; ++k) {
    ++checks;
    const auto msg = properties::reciprocal_2x2(std::clamp(std::exp(logv(rng)), 1.0 / 9, 9.0));
    if (!msg.empty()) c.fail("2x2 closed form: " + msg);
    std::vector<double> w(order(rng));
    double total = 0.0;
    for (auto& x : w) total += (x = raw(rng));
    for (auto& x : w) x /= total;
    ++checks;
    const auto rec = properties::consistent_recovery(w);
    if (!rec.empty()) c.fail("consistent recovery: " + rec);
  }
  c.note(std::to_string(checks) + " checks over " + std::to_string(problems.size()) + " problems");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"SAW golden", saw_golden},
      {"MEW golden", mew_golden},
      {"AHP criteria weights golden", ahp_weights_golden},
      {"AHP logarithmic mapping golden", ahp_mapping_golden},
      {"AHP global priorities golden", ahp_global_golden},
      {"ANP supermatrix, limit and priorities golden", anp_golden},
      {"COPRAS golden", copras_golden},
      {"MOORA golden", moora_golden},
      {"FUCA golden", fuca_golden},
      {"WASPAS golden", waspas_golden},
      {"cross-method comparison", compare_tops},
      {"property suite", property_suite},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!out.pass) ++failed;
    std::printf("[%s] %2zu. %-46s %8.1f ms  %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), ms,
                out.detail.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
