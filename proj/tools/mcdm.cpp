// mcdm: rank, compare, ahp, anp and waspas-sweep over a problem file or a bundled fixture.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcdm/mcdm.hpp"
#include "mcdm_fixtures.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kConvergence = 4,
  kConsistency = 5,
};

int exit_code_for(mcdm::ErrorCategory category) {
  switch (category) {
    case mcdm::ErrorCategory::Usage: return kUsage;
    case mcdm::ErrorCategory::Parse: return kParse;
    case mcdm::ErrorCategory::Validation: return kValidation;
    case mcdm::ErrorCategory::Convergence: return kConvergence;
    case mcdm::ErrorCategory::Consistency: return kConsistency;
  }
  return kUsage;
}

// A readable path wins; otherwise the name (with or without extension) may be a bundled fixture.
mcdm::ProblemFile resolve_input(const std::string& name, const mcdm::IngestOptions& opts) {
  if (std::filesystem::is_regular_file(name)) return mcdm::load_problem(name, mcdm::InputFormat::Auto, opts);
  const auto stem = std::filesystem::path(name).stem().string();
  for (const auto& f : mcdm::fixtures::kFixtures) {
    if (f.name == stem) {
      const auto format = f.extension == ".json" ? mcdm::InputFormat::Json : mcdm::InputFormat::Csv;
      return mcdm::parse_problem(f.text, format, opts);
    }
  }
  throw mcdm::Error(mcdm::ErrorCode::ParseError, "'" + name + "' is neither a readable file nor a bundled fixture");
}

const mcdm::DecisionProblem& require_problem(const mcdm::ProblemFile& file) {
  if (!file.problem) throw mcdm::Error(mcdm::ErrorCode::MissingSection, "input has no alternative values");
  return *file.problem;
}

std::vector<mcdm::MethodId> parse_method_list(const std::vector<std::string>& items) {
  std::vector<mcdm::MethodId> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) out.push_back(mcdm::parse_matrix_method(name));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-criteria decision making: SAW, MEW, AHP, ANP, COPRAS, MOORA, FUCA, WASPAS"};
  app.require_subcommand(1);

  std::string input;
  std::vector<std::string> methods;
  double lambda = mcdm::kDefaultWaspasLambda;
  std::string grid = "0:1:0.1";
  bool strict = false;
  bool weights_only = false;
  bool renormalize = false;
  std::string hybrid;
  std::string format_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", input, "problem file (.csv/.json) or bundled fixture name")->required();
    sub->add_option("--format", format_name, "table, json or csv (default: $MCDM_FORMAT or table)");
    sub->add_flag("--renormalize", renormalize, "rescale weights that do not sum to one");
  };

  auto* rank = app.add_subcommand("rank", "rank alternatives with one method");
  add_common(rank);
  rank->add_option("--method", methods, "saw, mew, copras, moora, fuca or waspas (default saw)");
  rank->add_option("--lambda", lambda, "WASPAS lambda in [0, 1]");

  auto* compare = app.add_subcommand("compare", "ranks of several methods side by side");
  add_common(compare);
  compare->add_option("--method", methods, "methods to compare, repeated or comma separated (default all six)");
  compare->add_option("--lambda", lambda, "WASPAS lambda in [0, 1]");

  auto* ahp = app.add_subcommand("ahp", "analytic hierarchy process");
  add_common(ahp);
  ahp->add_flag("--strict", strict, "fail when any CR exceeds 0.1");
  ahp->add_flag("--weights-only", weights_only, "stop after the criteria weights");
  ahp->add_option("--hybrid", hybrid, "rank with this method using the AHP weights");
  ahp->add_option("--lambda", lambda, "WASPAS lambda for --hybrid waspas");

  auto* anp = app.add_subcommand("anp", "analytic network process");
  add_common(anp);
  anp->add_flag("--strict", strict, "fail when any block CR exceeds 0.1");

  auto* sweep = app.add_subcommand("waspas-sweep", "WASPAS scores and ranks over a lambda grid");
  add_common(sweep);
  sweep->add_option("--grid", grid, "START:STOP:STEP (default 0:1:0.1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (format_name.empty()) {
      const char* env = std::getenv("MCDM_FORMAT");
      format_name = env != nullptr && *env != '\0' ? env : "table";
    }
    const auto format = mcdm::parse_output_format(format_name);
    if (!format) {
      throw mcdm::Error(mcdm::ErrorCode::InvalidArgument, "unknown format '" + format_name + "'");
    }

    const auto file = resolve_input(input, mcdm::IngestOptions{renormalize});
    const mcdm::MethodOptions method_options{lambda};
    mcdm::Report report;
    if (rank->parsed()) {
      const auto list = parse_method_list(methods);
      if (list.size() > 1) throw mcdm::Error(mcdm::ErrorCode::InvalidArgument, "rank takes one method");
      report = mcdm::cmd_rank(require_problem(file), list.empty() ? mcdm::MethodId::Saw : list.front(),
                              method_options);
    } else if (compare->parsed()) {
      auto list = parse_method_list(methods);
      if (list.empty()) list.assign(mcdm::kMatrixMethods.begin(), mcdm::kMatrixMethods.end());
      report = mcdm::cmd_compare(require_problem(file), list, method_options);
    } else if (ahp->parsed()) {
      mcdm::AhpCommandOptions options{strict, weights_only, std::nullopt, method_options};
      if (!hybrid.empty()) options.hybrid = mcdm::parse_matrix_method(hybrid);
      report = mcdm::cmd_ahp(file, options);
    } else if (anp->parsed()) {
      report = mcdm::cmd_anp(file, strict);
    } else {
      const auto lambdas = mcdm::parse_grid(grid);
      report = mcdm::cmd_waspas_sweep(require_problem(file), lambdas);
    }
    std::cout << mcdm::render(report, *format);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return kOk;
  } catch (const mcdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.category());
  }
}
