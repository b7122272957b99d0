// Runs every method on the four-alternative example and prints the rankings,
// then the AHP and ANP examples from the bundled data files.

#include <cstdio>
#include <iostream>
#include <string>

#include "mcdm/mcdm.hpp"

namespace {

void print_ranking(const mcdm::RankingResult& r) {
  std::printf("%-7s", std::string(mcdm::to_string(r.method)).c_str());
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    std::printf("  %s=%.4f", r.label(i).c_str(), r.scores[i]);
  }
  std::printf("   %s\n", r.ranking_line().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data = argc > 1 ? argv[1] : MCDM_DATA_DIR;
  try {
    const auto file = mcdm::load_problem(data + "/sample.csv");
    const auto& problem = *file.problem;

    std::cout << "Matrix methods\n";
    for (auto m : mcdm::kMatrixMethods) print_ranking(mcdm::run_method(m, problem));

    const mcdm::PairwiseMatrix criteria(
        mcdm::SquareMatrix{{1.0, 3.0, 5.0}, {1.0 / 3.0, 1.0, 4.0}, {1.0 / 5.0, 1.0 / 4.0, 1.0}},
        {"C1", "C2", "C3"});
    const auto result = mcdm::ahp(mcdm::AhpModel{criteria, mcdm::DeriveFromProblem{}}, &problem);
    std::printf("\nAHP weights %.4f %.4f %.4f  CR %.4f\n", result.weights[0], result.weights[1],
                result.weights[2], result.criteria_report->cr);
    print_ranking(result.ranking);

    const auto network = mcdm::load_problem(data + "/anp_sample.json");
    std::cout << "\n" << mcdm::render(mcdm::cmd_anp(network), mcdm::OutputFormat::Table);
  } catch (const mcdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
