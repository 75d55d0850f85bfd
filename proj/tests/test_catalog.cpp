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

#include <array>
#include <functional>
#include <map>
#include <random>

#include "invar/catalog.hpp"
#include "support.hpp"

namespace invar::catalog {
namespace {

// Exact 3-vectors and 3x3 matrices for an oracle written in matrix form,
// independent of the index-contraction expander.
using Vec = std::array<Rational, 3>;
using Mat = std::array<Vec, 3>;

Vec mul(const Mat& m, const Vec& v) {
  Vec out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat transpose(const Mat& m) {
  Mat out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

Rational dot(const Vec& u, const Vec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Rational det(const Vec& u, const Vec& v, const Vec& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Rational trace(const Mat& m) { return m[0][0] + m[1][1] + m[2][2]; }

// Cofactor matrix: cof[i][j] = (-1)^(i+j) minor(i, j).
Mat cofactor(const Mat& m) {
  Mat out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      out[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return out;
}

struct Point {
  Vec a, b;
  Mat c;
};

using Oracle = std::function<Rational(const Point&)>;

const std::map<std::string, Oracle>& oracles() {
  static const std::map<std::string, Oracle> table = [] {
    std::map<std::string, Oracle> t;
    const auto M = [](const Point& p) { return mul(p.c, transpose(p.c)); };
    const auto N = [](const Point& p) { return mul(transpose(p.c), p.c); };
    const auto Ct = [](const Point& p) { return transpose(p.c); };
    t["C002"] = [=](const Point& p) { return trace(N(p)); };
    t["C200"] = [](const Point& p) { return dot(p.a, p.a); };
    t["C020"] = [](const Point& p) { return dot(p.b, p.b); };
    t["C003"] = [=](const Point& p) { return det(Ct(p)[0], Ct(p)[1], Ct(p)[2]); };
    t["C111"] = [](const Point& p) { return dot(p.a, mul(p.c, p.b)); };
    t["C004"] = [=](const Point& p) { return trace(mul(N(p), N(p))); };
    t["C202"] = [=](const Point& p) { return dot(p.a, mul(M(p), p.a)); };
    t["C022"] = [=](const Point& p) { return dot(p.b, mul(N(p), p.b)); };
    t["C112"] = [](const Point& p) { return dot(p.a, mul(cofactor(p.c), p.b)); };
    t["C113"] = [=](const Point& p) { return dot(p.a, mul(M(p), mul(p.c, p.b))); };
    t["C123"] = [=](const Point& p) {
      return det(p.b, mul(Ct(p), p.a), mul(N(p), p.b));
    };
    t["C204"] = [=](const Point& p) { return dot(p.a, mul(mul(M(p), M(p)), p.a)); };
    t["C024"] = [=](const Point& p) { return dot(p.b, mul(mul(N(p), N(p)), p.b)); };
    t["C213"] = [=](const Point& p) { return det(p.a, mul(p.c, p.b), mul(M(p), p.a)); };
    t["C214"] = [=](const Point& p) {
      const Vec cta = mul(Ct(p), p.a);
      return det(p.b, cta, mul(N(p), cta));
    };
    t["C124"] = [=](const Point& p) {
      const Vec cb = mul(p.c, p.b);
      return det(p.a, cb, mul(M(p), cb));
    };
    t["C125"] = [=](const Point& p) {
      return det(p.b, mul(N(p), p.b), mul(N(p), mul(Ct(p), p.a)));
    };
    t["C215"] = [=](const Point& p) {
      return det(p.a, mul(M(p), p.a), mul(M(p), mul(p.c, p.b)));
    };
    t["C306"] = [=](const Point& p) {
      const Vec ma = mul(M(p), p.a);
      return det(p.a, ma, mul(M(p), ma));
    };
    t["C036"] = [=](const Point& p) {
      const Vec nb = mul(N(p), p.b);
      return det(p.b, nb, mul(N(p), nb));
    };
    return t;
  }();
  return table;
}

TEST(Catalog, HasTwentyInvariantsWithTheirDegrees) {
  const auto& cat = build_catalog();
  ASSERT_EQ(cat.size(), 20u);
  for (const auto& inv : cat) {
    const auto ctx = fano_context();
    // Tri-degree from the variables that occur.
    for (const auto& t : inv.full.terms()) {
      int da = 0, db = 0, dc = 0;
      for (std::size_t v = 0; v < 15; ++v) (v < 3 ? da : v < 6 ? db : dc) += t.monomial[v];
      EXPECT_EQ(da, inv.label.a) << inv.label.name();
      EXPECT_EQ(db, inv.label.b) << inv.label.name();
      EXPECT_EQ(dc, inv.label.c) << inv.label.name();
    }
    EXPECT_FALSE(inv.full.is_zero()) << inv.label.name();
  }
  EXPECT_EQ(invariant("C306").full.size(), invariant("C036").full.size());
  EXPECT_THROW(invariant("C999"), std::invalid_argument);
}

TEST(Catalog, AgreesWithMatrixFormOracle) {
  std::mt19937_64 rng(17);
  ASSERT_EQ(oracles().size(), 20u);
  for (int trial = 0; trial < 10; ++trial) {
    const auto coords = testing::random_point(15, rng, 5);
    Point p;
    for (int i = 0; i < 3; ++i) {
      p.a[i] = coords[i];
      p.b[i] = coords[3 + i];
      for (int j = 0; j < 3; ++j) p.c[i][j] = coords[6 + 3 * i + j];
    }
    for (const auto& inv : build_catalog()) {
      const auto& oracle = oracles().at(inv.label.name());
      EXPECT_EQ(inv.full.evaluate(std::span<const Rational>(coords)), oracle(p))
          << inv.label.name();
    }
  }
}

TEST(Catalog, ContractHandlesEpsilon) {
  const auto det3 = contract("eps[ijk] eps[ABG] c[iA] c[jB] c[kG]", Rational(1, 6));
  EXPECT_EQ(det3.size(), 6u);
  EXPECT_THROW(contract("a[i] q[i]"), std::invalid_argument);
}

TEST(Catalog, ExactlyTwelveRestrictionsSurvive) {
  int nonzero = 0;
  for (const auto& inv : build_catalog()) nonzero += inv.restricted.is_zero() ? 0 : 1;
  EXPECT_EQ(nonzero, 12);
  for (const auto& name : y_assignment()) EXPECT_FALSE(invariant(name).restricted.is_zero());
  EXPECT_TRUE(verify_restrictions().all_passed());
}

TEST(Catalog, TableOneIdentitiesHold) {
  const auto report = verify_table1();
  EXPECT_EQ(report.size(), 12u);
  EXPECT_TRUE(report.all_passed()) << report.to_text();
}

TEST(Catalog, PhiIsARingHomomorphism) {
  std::mt19937_64 rng(2);
  const auto y = y_context();
  for (int i = 0; i < 20; ++i) {
    const auto p = testing::random_polynomial(y, rng, 3, 2);
    const auto q = testing::random_polynomial(y, rng, 3, 2);
    EXPECT_EQ(phi(p * q), phi(p) * phi(q));
    EXPECT_EQ(phi(p + q), phi(p) + phi(q));
  }
  EXPECT_EQ(phi(Polynomial::constant(y, 3)), Polynomial::constant(generator_context(), 3));
}

TEST(Catalog, GeneratorsAreFunctionallyIndependent) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 5; ++i) {
    const auto pt = testing::random_point(7, rng);
    EXPECT_EQ(generator_jacobian_rank(pt), 5);
  }
  const std::vector<Rational> origin(7);
  EXPECT_LT(generator_jacobian_rank(origin), 5);
}

class SyzygyIdeal : public ::testing::Test {
 protected:
  static const GroebnerBasis& basis() {
    static const GroebnerBasis gb = syzygy_ideal();
    return gb;
  }
};

TEST_F(SyzygyIdeal, HasThirtySevenElementsAndDimensionFive) {
  EXPECT_EQ(basis().basis.size(), 37u);
  const auto dim = affine_dimension(basis());
  EXPECT_EQ(dim.dimension, 5);
  EXPECT_EQ(dim.witness, (std::vector<std::string>{"y1", "y2", "y3", "y4", "y5"}));
}

TEST_F(SyzygyIdeal, EveryElementIsASyzygy) {
  for (const auto& g : basis().basis) EXPECT_TRUE(is_syzygy(g)) << g.to_string();
}

TEST_F(SyzygyIdeal, ParametricRelationsAreMembers) {
  const auto report = verify_parametric_solve(basis());
  EXPECT_EQ(report.size(), 7u);
  EXPECT_TRUE(report.all_passed()) << report.to_text();
}

TEST_F(SyzygyIdeal, InjectivityOnRandomSamples) {
  InjectivityOptions options;
  options.samples = 200;
  const auto report = verify_injectivity(basis(), options);
  EXPECT_TRUE(report.all_passed()) << report.to_text();
}

TEST_F(SyzygyIdeal, ComparisonDetectsAForeignGenerator) {
  std::vector<Polynomial> listed(basis().basis.begin(), basis().basis.end());
  listed.push_back(Polynomial::variable(y_context(), "y1"));
  const auto cmp = compare_with_listed(basis(), listed);
  EXPECT_FALSE(cmp.equal());
  EXPECT_EQ(cmp.listed_not_in_computed.size(), 1u);
  EXPECT_TRUE(cmp.computed_not_in_listed.empty());
}

}  // namespace
}  // namespace invar::catalog
