#include "reference.hpp"
#include "support.hpp"

using namespace mcdm;
using Catch::Matchers::WithinAbs;

namespace {

std::string ranking(const RankingResult& r) { return r.ranking_line(); }

DecisionProblem single_criterion(std::vector<double> column, Direction d = Direction::Maximize) {
  std::vector<std::string> alts;
  Matrix m(column.size(), 1);
  for (std::size_t i = 0; i < column.size(); ++i) {
    alts.push_back("A" + std::to_string(i + 1));
    m(i, 0) = column[i];
  }
  return DecisionProblem(alts, {{"C1", d, 1.0}}, std::move(m));
}

}  // namespace

TEST_CASE("SAW and MEW on the four-alternative example", "[methods]") {
  const auto p = support::problem("sample.csv");
  const auto s = saw(p);
  CHECK(support::max_diff(s.scores, reference::kSaw) < 5e-4);
  CHECK(ranking(s) == "A3 > A4 > A1 > A2");
  const auto m = mew(p);
  CHECK(support::max_diff(m.scores, reference::kMew) < 5e-4);
  CHECK(ranking(m) == "A3 > A4 > A2 > A1");
}

TEST_CASE("WASPAS blends SAW and MEW", "[methods]") {
  const auto p = support::problem("sample.csv");
  const auto half = waspas(p, 0.5);
  CHECK(support::max_diff(half.scores, reference::kWaspasHalf) < 5e-4);
  CHECK(half.top() == 2);
  CHECK(half.diagnostics.at("lambda") == 0.5);
  CHECK(support::max_diff(waspas(p, 1.0).scores, saw(p).scores) < 1e-12);
  CHECK(support::max_diff(waspas(p, 0.0).scores, mew(p).scores) < 1e-12);
  CHECK_THROWS_AS(waspas(p, 1.5), Error);
  CHECK_THROWS_AS(waspas(p, -0.1), Error);

  const std::vector<double> ends{0.0, 0.5, 1.0};
  const auto sweep = waspas_sweep(p, ends);
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].scores == mew(p).scores);
  CHECK(sweep[1].scores == waspas(p, 0.5).scores);
  CHECK(sweep[2].scores == saw(p).scores);
  CHECK(waspas_sweep(p, std::vector<double>{}).empty());
  const auto o = support::to_oracle(p);
  for (int k = 0; k <= 10; ++k) {
    const double lambda = k / 10.0;
    const auto r = waspas(p, lambda);
    CHECK(r.top() == 2);
    CHECK(support::max_diff(r.scores, oracle::waspas(o, lambda)) < 1e-12);
  }
}

TEST_CASE("COPRAS split sums and scores", "[methods]") {
  const auto p = support::problem("sample.csv");
  const auto weighted = apply_weights(normalize_sum(p), p.weights());
  const auto sums = split_sums(weighted, weighted.directions);
  CHECK(support::max_diff(sums.s_plus, reference::kCoprasSPlus) < 5e-4);
  CHECK(support::max_diff(sums.s_minus, reference::kCoprasSMinus) < 5e-4);
  CHECK(sums.benefit_count == 2);
  const auto c = copras(p);
  CHECK(support::max_diff(c.scores, reference::kCopras) < 5e-4);
  CHECK(ranking(c) == "A3 > A4 > A1 > A2");
  CHECK_THROWS_AS(split_sums(normalize_sum(p), p.directions()), Error);
}

TEST_CASE("COPRAS with only one kind of criterion", "[methods]") {
  const DecisionProblem benefit({"A1", "A2"},
                                {{"C1", Direction::Maximize, 0.6}, {"C2", Direction::Maximize, 0.4}},
                                Matrix{{2, 3}, {6, 1}});
  const auto c = copras(benefit);
  CHECK_THAT(c.scores[0], WithinAbs(0.6 * 0.25 + 0.4 * 0.75, 1e-15));
  CHECK_THAT(c.scores[1], WithinAbs(0.6 * 0.75 + 0.4 * 0.25, 1e-15));
  const auto weighted = apply_weights(normalize_sum(benefit), benefit.weights());
  for (double s : split_sums(weighted, weighted.directions).s_minus) CHECK(s == 0.0);

  const DecisionProblem swapped({"A1", "A2"},
                                {{"C1", Direction::Maximize, 0.6}, {"C2", Direction::Maximize, 0.4}},
                                Matrix{{6, 1}, {2, 3}});
  CHECK(copras(swapped).scores[0] == c.scores[1]);
  CHECK(copras(swapped).scores[1] == c.scores[0]);

  const DecisionProblem cost({"A1", "A2", "A3"}, {{"C1", Direction::Minimize, 1.0}}, Matrix{{1}, {2}, {4}});
  const auto o = oracle::copras(support::to_oracle(cost));
  CHECK(support::max_diff(copras(cost).scores, o.p) < 1e-15);
  CHECK(ranking(copras(cost)) == "A1 > A2 > A3");
}

TEST_CASE("MOORA ratio system", "[methods]") {
  const auto p = support::problem("sample.csv");
  const auto m = moora(p);
  CHECK(support::max_diff(m.scores, reference::kMoora) < 5e-4);
  CHECK(ranking(m) == "A3 > A4 > A2 > A1");
  const DecisionProblem cost({"A1", "A2"}, {{"C1", Direction::Minimize, 0.5}, {"C2", Direction::Minimize, 0.5}},
                             Matrix{{1, 2}, {3, 4}});
  for (double s : moora(cost).scores) CHECK(s <= 0.0);
}

TEST_CASE("FUCA rank matrix and weighted rank sums", "[methods]") {
  const auto p = support::problem("sample.csv");
  const auto r = criterion_ranks(p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(r(i, j) == reference::kFucaRanks[i][j]);
  const auto f = fuca(p);
  CHECK(support::max_diff(f.scores, reference::kFuca) < 1e-9);
  CHECK(ranking(f) == "A4 > A3 > A1 = A2");
  CHECK(f.ranks[0] == 3.5);
  CHECK(f.ordering == Ordering::LowerScoreBetter);

  CHECK(criterion_ranks(single_criterion({5, 5, 3})).column(0) == std::vector<double>{1.5, 1.5, 3});
  CHECK(criterion_ranks(single_criterion({1, 2, 3}, Direction::Minimize)).column(0) ==
        std::vector<double>{1, 2, 3});
  const auto two = fuca(single_criterion({2, 7}));
  CHECK(two.scores == std::vector<double>{2, 1});
  CHECK(two.top() == 1);
  const auto same = fuca(single_criterion({4, 4, 4}));
  CHECK(same.ranks == std::vector<double>{2, 2, 2});
}

TEST_CASE("single-criterion and degenerate problems", "[methods]") {
  const auto p = single_criterion({2, 8, 4});
  CHECK(support::max_diff(saw(p).scores, {0.25, 1.0, 0.5}) < 1e-15);
  CHECK(support::max_diff(mew(p).scores, {0.25, 1.0, 0.5}) < 1e-15);
  CHECK(saw(p).ranks == mew(p).ranks);

  const DecisionProblem dup({"A1", "A2", "A3"},
                            {{"C1", Direction::Maximize, 0.5}, {"C2", Direction::Minimize, 0.5}},
                            Matrix{{3, 2}, {3, 2}, {1, 5}});
  const auto s = saw(dup);
  CHECK(s.scores[0] == s.scores[1]);
  CHECK(s.ranks[0] == 1.5);
  const DecisionProblem best({"A1", "A2"},
                             {{"C1", Direction::Maximize, 0.5}, {"C2", Direction::Minimize, 0.5}},
                             Matrix{{9, 1}, {3, 2}});
  CHECK(mew(best).scores[0] == 1.0);
}

TEST_CASE("all six methods match the brute-force oracle on the exercise fixtures", "[methods][oracle]") {
  for (const char* name : {"sample.csv", "exercise1.csv", "exercise2.csv", "exercise3.csv"}) {
    INFO(name);
    const auto p = support::problem(name);
    const auto o = support::to_oracle(p);
    CHECK(support::max_diff(saw(p).scores, oracle::saw(o)) < 1e-12);
    CHECK(support::max_diff(mew(p).scores, oracle::mew(o)) < 1e-12);
    CHECK(support::max_diff(copras(p).scores, oracle::copras(o).p) < 1e-12);
    CHECK(support::max_diff(moora(p).scores, oracle::moora(o)) < 1e-12);
    CHECK(support::max_diff(fuca(p).scores, oracle::fuca(o)) < 1e-12);
    CHECK(support::max_diff(waspas(p).scores, oracle::waspas(o, 0.5)) < 1e-12);
    for (auto m : {saw(p), mew(p), copras(p), moora(p), waspas(p)}) {
      CHECK(m.ranks == oracle::ranks_with_tolerance(m.scores, true, 1e-12));
    }
    CHECK(fuca(p).ranks == oracle::ranks_with_tolerance(oracle::fuca(o), false, 1e-12));
  }
}

TEST_CASE("exercise fixtures: top alternatives per method", "[methods][oracle]") {
  const auto e1 = support::problem("exercise1.csv");
  CHECK(saw(e1).label(saw(e1).top()) == "A3");
  CHECK(mew(e1).label(mew(e1).top()) == "A1");
  CHECK(copras(e1).label(copras(e1).top()) == "A3");
  CHECK(moora(e1).label(moora(e1).top()) == "A1");
  CHECK(fuca(e1).label(fuca(e1).top()) == "A1");
  CHECK(waspas(e1).label(waspas(e1).top()) == "A1");

  const auto e2 = support::problem("exercise2.csv");
  CHECK(ranking(fuca(e2)) == "A2 > A1 = A3 > A4");
  for (int k = 0; k <= 10; ++k) CHECK(ranking(waspas(e2, k / 10.0)) == "A2 > A3 > A4 > A1");

  const auto e3 = support::problem("exercise3.csv");
  for (auto r : {saw(e3), mew(e3), copras(e3), moora(e3), fuca(e3), waspas(e3)}) {
    CHECK(ranking(r) == "A3 > A4 > A6 > A1 > A5 > A2");
  }
}
