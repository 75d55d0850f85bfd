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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace invar {

struct CheckResult {
  std::string check;
  bool passed = false;
  std::optional<std::string> witness;
  double elapsed_ms = 0.0;
};

class Report {
 public:
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void add(std::string check, bool passed,
           std::optional<std::string> witness = std::nullopt,
           double elapsed_ms = 0.0) {
    checks_.push_back({std::move(check), passed, std::move(witness), elapsed_ms});
  }
  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  std::size_t passed_count() const;
  bool all_passed() const { return passed_count() == checks_.size(); }
  const CheckResult* find(std::string_view check) const;

  // elapsed_ms is emitted only when `with_timing` is set so that reports of
  // identical runs stay byte-identical.
  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;

 private:
  std::vector<CheckResult> checks_;
};

// Milliseconds elapsed since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace invar
