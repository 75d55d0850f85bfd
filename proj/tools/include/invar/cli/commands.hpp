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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invar/report.hpp"

namespace invar::cli {

enum class Format { kJson, kText };

// Exit-code contract shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double tolerance = 1e-9;
  int series_terms = 20;
  std::size_t pair_budget = 1'000'000;
  std::optional<std::string> order;  // lex | grlex | grevlex
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> fixture_dir;
  // Alternative list of syzygies for verify-syzygies.
  std::optional<std::filesystem::path> listed;
  Format format = Format::kJson;
  bool timing = false;
  bool dump_ideal = false;  // catalog: emit the elimination input instead
};

struct CommandOutcome {
  int exit_code = kExitPass;
  Report report;
  nlohmann::json result;     // command-specific payload, may be null
  std::string text_summary;  // lines printed ahead of the report in text mode
  std::string rendered;      // final output in the requested format
};

// Validates the configuration; returns an error message or nullopt.
std::optional<std::string> validate(const RunConfig& config);

// Fixture directory: RunConfig::fixture_dir, then $INVAR_FIXTURES, then the
// directory configured at build time.
std::filesystem::path fixture_directory(const RunConfig& config);

CommandOutcome cmd_verify_syzygies(const RunConfig& config);
CommandOutcome cmd_groebner(const RunConfig& config);
CommandOutcome cmd_dim(const RunConfig& config);
CommandOutcome cmd_table1(const RunConfig& config);
CommandOutcome cmd_check_invariance(const RunConfig& config);
CommandOutcome cmd_molien(const RunConfig& config);
CommandOutcome cmd_catalog(const RunConfig& config);

const std::vector<std::string>& command_names();

// Dispatches on config.command and turns exceptions into exit code 2.
// Never throws; the output is in CommandOutcome::rendered.
CommandOutcome run(const RunConfig& config);

}  // namespace invar::cli
