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

#include <numeric>

#include "invar/molien.hpp"

namespace invar::molien {
namespace {

TEST(Molien, GeometricSeries) {
  EXPECT_EQ(expand({1}, {{1, 1}}, 3), (Coefficients{1, 1, 1, 1}));
  EXPECT_EQ(expand({1}, {{1, 2}}, 4), (Coefficients{1, 2, 3, 4, 5}));
  EXPECT_EQ(expand({1}, {{2, 1}}, 5), (Coefficients{1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(expand({1, 1}, {}, 0), (Coefficients{1}));
}

TEST(Molien, RejectsMalformedInput) {
  EXPECT_THROW(expand({1}, {{0, 1}}, 3), std::invalid_argument);
  EXPECT_THROW(expand({1}, {{1, 0}}, 3), std::invalid_argument);
  EXPECT_THROW(expand({1}, {{1, 1}}, -1), std::invalid_argument);
  EXPECT_THROW(expand({1}, {{1, 40}}, 200), ArithmeticOverflow);
}

TEST(Molien, TwoQubitSeriesLeadingCoefficients) {
  const auto s = two_qubit_molien(2);
  EXPECT_EQ(s.expansion, (Coefficients{1, 1, 4}));
  EXPECT_EQ(std::accumulate(s.numerator.begin(), s.numerator.end(), std::int64_t{0}), 16);
}

TEST(Molien, AgreesWithLongDivision) {
  const auto s = two_qubit_molien(40);
  EXPECT_EQ(s.expansion, long_division(s.numerator, s.denominator_factors, 40));
  const auto f = so2so2_free_series(30);
  EXPECT_EQ(f.expansion, long_division(f.numerator, f.denominator_factors, 30));
}

TEST(Molien, ReadsPrimaryAndSecondaryDegrees) {
  const auto d = read_degrees(two_qubit_molien());
  EXPECT_EQ(d.primary, (std::vector<int>{1, 2, 2, 2, 3, 3, 4, 4, 4, 6}));
  EXPECT_EQ(d.secondary, (std::vector<int>{4, 5, 6, 6, 6, 7, 7, 8, 8, 9, 9, 9, 10, 11, 15}));
}

TEST(Molien, ExpansionIsLinearInTheNumerator) {
  const std::vector<DenominatorFactor> den = {{1, 1}, {2, 3}, {3, 2}};
  const Coefficients p = {1, 0, 2, -1}, q = {0, 3, 0, 0, 5};
  Coefficients sum(5, 0);
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] = (k < p.size() ? p[k] : 0) + (k < q.size() ? q[k] : 0);
  }
  const auto ep = expand(p, den, 12), eq = expand(q, den, 12), es = expand(sum, den, 12);
  for (std::size_t k = 0; k < es.size(); ++k) EXPECT_EQ(es[k], ep[k] + eq[k]);
}

TEST(Molien, CountsBoundLowDegreeInvariants) {
  // Degree 2: three quadratic invariants plus the square of the degree-1 one.
  const auto s = two_qubit_molien(4);
  EXPECT_GE(s.expansion[2], 3 + 1);
  EXPECT_EQ(s.expansion[1], 1);
}

TEST(Molien, FreeSeriesForFiveGenerators) {
  // 1/((1-q)^3 (1-q^2)^2): dimensions of polynomials in F1,G1,G2 and G3,G4.
  EXPECT_EQ(so2so2_free_series(3).expansion, (Coefficients{1, 3, 8, 16}));
}

}  // namespace
}  // namespace invar::molien
