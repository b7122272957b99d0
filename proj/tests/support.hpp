#pragma once

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "mcdm/mcdm.hpp"
#include "oracle.hpp"

namespace support {

inline mcdm::ProblemFile fixture(const std::string& file) {
  return mcdm::load_problem(std::string(MCDM_DATA_DIR) + "/" + file);
}

inline mcdm::DecisionProblem problem(const std::string& file) { return *fixture(file).problem; }

inline oracle::Problem to_oracle(const mcdm::DecisionProblem& p) {
  oracle::Problem out;
  for (std::size_t i = 0; i < p.num_alternatives(); ++i) {
    const auto row = p.values().row(i);
    out.f.emplace_back(row.begin(), row.end());
  }
  for (const auto& c : p.criteria()) {
    out.benefit.push_back(c.direction == mcdm::Direction::Maximize);
    out.w.push_back(c.weight);
  }
  return out;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace support
