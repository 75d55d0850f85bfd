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

#include <gtest/gtest.h>

#include <random>

#include "invar/groebner.hpp"
#include "invar/poly_json.hpp"
#include "invar/report.hpp"
#include "support.hpp"

namespace invar {
namespace {

TEST(PolyJson, PolynomialRoundTrip) {
  std::mt19937_64 rng(13);
  const auto ctx = VarContext::create({"p", "q", "r"}, MonomialOrder::kGrevlex, {"r", "q", "p"});
  for (int i = 0; i < 30; ++i) {
    const auto p = testing::random_polynomial(ctx, rng, 5, 4);
    const auto j = to_json(p);
    const auto back = polynomial_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_TRUE(back.context()->same_as(*ctx));
    EXPECT_EQ(back.rename_into(ctx), p);
  }
}

TEST(PolyJson, BasisRoundTrip) {
  const auto ctx = VarContext::create({"x", "y"});
  const auto gb = buchberger(
      Ideal(ctx, {parse_polynomial("x - y", ctx), parse_polynomial("x^2 + y^2 - 1", ctx)}));
  const auto back = basis_from_json(nlohmann::json::parse(to_json(gb).dump()));
  ASSERT_EQ(back.basis.size(), gb.basis.size());
  EXPECT_TRUE(back.reduced);
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    EXPECT_EQ(back.basis[i].to_string(), gb.basis[i].to_string());
  }
}

TEST(PolyJson, IdealAcceptsStringsAndTermObjects) {
  const auto j = nlohmann::json::parse(R"({
    "vars": ["x", "y"], "order": "grlex",
    "generators": ["x*y - 1", {"terms": [{"coeff": "3/2", "exps": [2, 0]}]}]
  })");
  const Ideal ideal = ideal_from_json(j);
  ASSERT_EQ(ideal.generators().size(), 2u);
  EXPECT_EQ(ideal.context()->order(), MonomialOrder::kGrlex);
  EXPECT_EQ(ideal.generators()[1].to_string(), "3/2*x^2");
  EXPECT_THROW(ideal_from_json(nlohmann::json::parse(R"({"vars": ["x"]})")),
               std::invalid_argument);
  EXPECT_THROW(ideal_from_json(nlohmann::json::parse(R"({"vars": ["x"], "generators": ["z"]})")),
               std::invalid_argument);
}

TEST(Report, JsonOmitsTimingByDefault) {
  Report r;
  r.add("first", true, "ok", 12.5);
  r.add("second", false);
  const auto j = r.to_json();
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_FALSE(j[0].contains("elapsed_ms"));
  EXPECT_FALSE(j[1].contains("witness"));
  EXPECT_TRUE(r.to_json(true)[0].contains("elapsed_ms"));
  EXPECT_EQ(r.passed_count(), 1u);
  EXPECT_NE(r.to_text().find("1/2 checks passed"), std::string::npos);
  EXPECT_NE(r.find("second"), nullptr);
}

}  // namespace
}  // namespace invar
