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

#include "invar/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace invar {

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; }));
}

const CheckResult* Report::find(std::string_view check) const {
  for (const auto& c : checks_) {
    if (c.check == check) return &c;
  }
  return nullptr;
}

nlohmann::json Report::to_json(bool with_timing) const {
  auto out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {{"check", c.check},
                            {"status", c.passed ? "pass" : "fail"}};
    if (c.witness) entry["witness"] = *c.witness;
    if (with_timing) entry["elapsed_ms"] = c.elapsed_ms;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string Report::to_text(bool with_timing) const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.check;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", c.elapsed_ms);
      os << buf;
    }
    if (c.witness) os << "\n       " << *c.witness;
    os << "\n";
  }
  os << passed_count() << "/" << checks_.size() << " checks passed\n";
  return os.str();
}

}  // namespace invar
