// Copyright 2026 The Invar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "invar/cli/commands.hpp"

int main(int argc, char** argv) {
  using invar::cli::Format;
  invar::cli::RunConfig config;

  CLI::App app{"Exact syzygy, invariance and series checks for two-qubit invariants", "invar"};
  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(invar::cli::command_names()));
  app.add_option("--seed", config.seed, "Seed of the sampling engine");
  app.add_option("--samples", config.samples, "Random samples per numeric suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tolerance, "Relative tolerance of numeric suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--terms", config.series_terms, "Highest series degree N")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--pair-budget", config.pair_budget, "Maximum S-pairs reduced");
  app.add_option("--order", config.order, "Monomial order for groebner")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  app.add_option("--input", config.input, "Ideal JSON for groebner")->check(CLI::ExistingFile);
  app.add_option("--output,-o", config.output, "Write output here instead of stdout");
  app.add_option("--fixtures", config.fixture_dir, "Fixture directory")
      ->check(CLI::ExistingDirectory);
  app.add_option("--listed", config.listed, "Syzygy list to compare against")
      ->check(CLI::ExistingFile);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", config.timing, "Include elapsed_ms in reports");
  app.add_flag("--ideal", config.dump_ideal, "catalog: print the elimination input ideal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : invar::cli::kExitUsage;
  }
  config.format = format == "text" ? Format::kText : Format::kJson;

  const auto outcome = invar::cli::run(config);
  if (config.output) {
    std::ofstream out(*config.output);
    if (!out) {
      std::cerr << "invar: cannot write " << config.output->string() << "\n";
      return invar::cli::kExitUsage;
    }
    out << outcome.rendered;
  } else {
    std::cout << outcome.rendered;
  }
  if (outcome.exit_code == invar::cli::kExitUsage) {
    for (const auto& c : outcome.report.checks()) {
      std::cerr << "invar: " << c.check << ": " << c.witness.value_or("") << "\n";
    }
  }
  return outcome.exit_code;
}
