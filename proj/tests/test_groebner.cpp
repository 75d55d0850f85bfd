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

#include <algorithm>
#include <random>

#include "invar/groebner.hpp"
#include "support.hpp"

namespace invar {
namespace {

Polynomial P(std::string_view text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }

Ideal make_ideal(const ContextPtr& ctx, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, ctx));
  return Ideal(ctx, std::move(ps));
}

bool is_groebner(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      if (!normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (gb.basis[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.basis[i].terms()) {
        if (gb.basis[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

TEST(Groebner, CircleMeetsDiagonal) {
  const auto ctx = VarContext::create({"x", "y"});
  const auto gb = buchberger(make_ideal(ctx, {"x - y", "x^2 + y^2 - 1"}));
  ASSERT_EQ(gb.basis.size(), 2u);
  EXPECT_EQ(gb.basis[0], P("x - y", ctx));
  EXPECT_EQ(gb.basis[1], P("y^2 - 1/2", ctx));
  EXPECT_TRUE(gb.reduced);
}

TEST(Groebner, TwistedCubicGrevlex) {
  const auto ctx = VarContext::create({"x", "y", "z"}, MonomialOrder::kGrevlex);
  const auto gb = buchberger(make_ideal(ctx, {"y - x^2", "z - x^3"}));
  EXPECT_EQ(gb.basis.size(), 3u);
  EXPECT_TRUE(ideal_member(P("x*z - y^2", ctx), gb));
  EXPECT_FALSE(ideal_member(P("x*y - z + 1", ctx), gb));
  EXPECT_EQ(affine_dimension(gb).dimension, 1);
}

TEST(Groebner, UnitAndZeroIdeals) {
  const auto ctx = VarContext::create({"x", "y"});
  const auto unit = buchberger(make_ideal(ctx, {"x*y - 1", "x", "y + 3"}));
  EXPECT_TRUE(unit.is_unit());
  EXPECT_EQ(affine_dimension(unit).dimension, -1);
  const auto zero = buchberger(Ideal(ctx, {}));
  EXPECT_TRUE(zero.basis.empty());
  EXPECT_EQ(affine_dimension(zero).dimension, 2);
}

TEST(Groebner, NormalFormHasNoReducibleTerms) {
  const auto ctx = VarContext::create({"x", "y", "z"}, MonomialOrder::kGrlex);
  const auto gb = buchberger(make_ideal(ctx, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_polynomial(ctx, rng, 6, 5);
    const auto r = normal_form(p, gb.basis);
    for (const auto& t : r.terms()) {
      for (const auto& g : gb.basis) EXPECT_FALSE(g.leading_monomial().divides(t.monomial));
    }
    // p - r lies in the ideal.
    EXPECT_TRUE(normal_form(p - r, gb.basis).is_zero());
  }
}

TEST(Groebner, SPolynomialCancelsLeadingTerms) {
  const auto ctx = VarContext::create({"x", "y"}, MonomialOrder::kGrlex);
  const auto s = s_polynomial(P("x^3 - 2*x*y", ctx), P("x^2*y - 2*y^2 + x", ctx));
  EXPECT_EQ(s, P("-x^2", ctx));
}

TEST(Groebner, EveryResultPassesTheSPairCriterion) {
  std::mt19937_64 rng(21);
  for (auto order : {MonomialOrder::kLex, MonomialOrder::kGrlex, MonomialOrder::kGrevlex}) {
    const auto ctx = VarContext::create({"x", "y", "z"}, order);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(ctx, rng, 3, 2));
      const auto gb = buchberger(Ideal(ctx, gens));
      EXPECT_TRUE(is_groebner(gb));
      EXPECT_TRUE(is_reduced(gb));
      for (const auto& g : gens) EXPECT_TRUE(ideal_member(g, gb));
    }
  }
}

TEST(Groebner, ReducedBasisIgnoresGeneratorOrder) {
  std::mt19937_64 rng(4);
  const auto ctx = VarContext::create({"x", "y", "z"}, MonomialOrder::kGrevlex);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(testing::random_polynomial(ctx, rng, 3, 2));
    const auto ref = buchberger(Ideal(ctx, gens));
    for (int perm = 0; perm < 5; ++perm) {
      std::shuffle(gens.begin(), gens.end(), rng);
      // Scaling generators must not matter either.
      auto scaled = gens;
      scaled[0] *= Rational(-7, 3);
      EXPECT_EQ(buchberger(Ideal(ctx, scaled)).basis, ref.basis);
    }
  }
}

TEST(Groebner, DimensionDoesNotGrowWithMoreGenerators) {
  std::mt19937_64 rng(8);
  const auto ctx = VarContext::create({"w", "x", "y", "z"}, MonomialOrder::kGrevlex);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    int last = 4;
    for (int k = 0; k < 4; ++k) {
      gens.push_back(testing::random_polynomial(ctx, rng, 2, 2));
      const int d = affine_dimension(buchberger(Ideal(ctx, gens))).dimension;
      EXPECT_LE(d, last);
      last = d;
    }
  }
}

TEST(Groebner, DimensionWitnessIsIndependent) {
  const auto ctx = VarContext::create({"x", "y", "z", "w"});
  const auto gb = buchberger(make_ideal(ctx, {"x*y", "x*z"}));
  const auto dim = affine_dimension(gb);
  EXPECT_EQ(dim.dimension, 3);
  EXPECT_EQ(dim.witness, (std::vector<std::string>{"y", "z", "w"}));
  EXPECT_TRUE(is_independent(gb, dim.witness));
  const std::vector<std::string> dependent = {"x", "y"};
  EXPECT_FALSE(is_independent(gb, dependent));
}

TEST(Groebner, EliminationKeepsTrailingVariables) {
  const auto ctx = VarContext::create({"t", "x", "y"});
  const auto gb = buchberger(make_ideal(ctx, {"x - t^2", "y - t^3"}));
  const std::vector<std::string> keep = {"x", "y"};
  const auto elim = elimination_ideal(gb, keep);
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_EQ(elim[0].primitive(), P("x^3 - y^2", ctx).primitive());
  const std::vector<std::string> bad = {"t", "y"};
  EXPECT_THROW(elimination_ideal(gb, bad), std::invalid_argument);
  const auto grevlex = buchberger(
      Ideal(ctx->with_order(MonomialOrder::kGrevlex),
            {P("x - t^2", ctx).rename_into(ctx->with_order(MonomialOrder::kGrevlex))}));
  EXPECT_THROW(elimination_ideal(grevlex, keep), std::invalid_argument);
}

TEST(Groebner, PairBudgetIsEnforced) {
  const auto ctx = VarContext::create({"x", "y", "z"});
  const auto ideal = make_ideal(ctx, {"x^2 + y*z - 1", "y^2 - x*z + 2", "z^2 + x*y - 3"});
  GroebnerOptions tight;
  tight.pair_budget = 1;
  EXPECT_THROW(buchberger(ideal, tight), ResourceLimitExceeded);
  GroebnerStats stats;
  buchberger(ideal, {}, &stats);
  EXPECT_GT(stats.pairs_reduced, 1u);
}

TEST(Groebner, ReduceBasisMinimalizes) {
  const auto ctx = VarContext::create({"x", "y"});
  const auto gb = reduce_basis(ctx, {P("x^2", ctx), P("x^2*y + x", ctx), P("2*x", ctx)});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], P("x", ctx));
}

}  // namespace
}  // namespace invar
