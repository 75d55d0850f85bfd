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
#include <stdexcept>
#include <string>
#include <vector>

// Power series of rational functions N(q) / prod (1 - q^d)^m with integer
// coefficients, and the degree bookkeeping of a Hironaka decomposition.
namespace invar::molien {

using Coefficients = std::vector<std::int64_t>;

struct DenominatorFactor {
  int degree = 1;        // d >= 1
  int multiplicity = 1;  // m >= 1
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

struct RationalFunctionSeries {
  Coefficients numerator;  // numerator[k] is the coefficient of q^k
  std::vector<DenominatorFactor> denominator_factors;
  Coefficients expansion;  // d_0 .. d_N

  std::string to_string() const;
};

// Taylor coefficients d_0..d_N at q = 0. Throws std::invalid_argument for
// N < 0 or a malformed factor and ArithmeticOverflow if a coefficient
// leaves the int64 range.
Coefficients expand(const Coefficients& numerator,
                    const std::vector<DenominatorFactor>& factors, int n);

// Molien function of SU(2) x SU(2) acting on two-qubit density matrices.
RationalFunctionSeries two_qubit_molien(int n = 20);

// Free ring on generators of degrees 1,1,1,2,2; the series a free
// generation in those degrees implies.
RationalFunctionSeries so2so2_free_series(int n = 20);

struct Degrees {
  std::vector<int> primary;    // factor degrees with multiplicity, sorted
  std::vector<int> secondary;  // numerator exponents > 0 with multiplicity
};
Degrees read_degrees(const RationalFunctionSeries& series);

// Quotient coefficients of N(q) / D(q) by schoolbook long division, with
// D expanded to a dense integer polynomial first. Used as an independent
// cross-check of expand().
Coefficients long_division(const Coefficients& numerator,
                           const std::vector<DenominatorFactor>& factors, int n);

}  // namespace invar::molien
