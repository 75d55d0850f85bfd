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

#include "invar/molien.hpp"

#include <algorithm>
#include <sstream>

namespace invar::molien {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("series coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("series coefficient overflow");
  return out;
}

void validate(const std::vector<DenominatorFactor>& factors, int n) {
  if (n < 0) throw std::invalid_argument("number of terms must be nonnegative");
  for (const auto& f : factors) {
    if (f.degree < 1 || f.multiplicity < 1) {
      throw std::invalid_argument("denominator factor needs degree >= 1 and multiplicity >= 1");
    }
  }
}

}  // namespace

Coefficients expand(const Coefficients& numerator,
                    const std::vector<DenominatorFactor>& factors, int n) {
  validate(factors, n);
  Coefficients out(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < numerator.size() && k < out.size(); ++k) out[k] = numerator[k];
  // Multiplying by 1/(1 - q^d) is a running sum with stride d.
  for (const auto& f : factors) {
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      for (std::size_t k = static_cast<std::size_t>(f.degree); k < out.size(); ++k) {
        out[k] = checked_add(out[k], out[k - static_cast<std::size_t>(f.degree)]);
      }
    }
  }
  return out;
}

Coefficients long_division(const Coefficients& numerator,
                           const std::vector<DenominatorFactor>& factors, int n) {
  validate(factors, n);
  Coefficients den{1};
  for (const auto& f : factors) {
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      Coefficients next(den.size() + static_cast<std::size_t>(f.degree), 0);
      for (std::size_t k = 0; k < den.size(); ++k) {
        next[k] = checked_add(next[k], den[k]);
        next[k + static_cast<std::size_t>(f.degree)] =
            checked_add(next[k + static_cast<std::size_t>(f.degree)], -den[k]);
      }
      den = std::move(next);
    }
  }
  // den[0] == 1, so each quotient digit is an exact integer.
  Coefficients rem(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < numerator.size() && k < rem.size(); ++k) rem[k] = numerator[k];
  Coefficients quot(rem.size(), 0);
  for (std::size_t k = 0; k < rem.size(); ++k) {
    quot[k] = rem[k];
    for (std::size_t j = 1; j < den.size() && k + j < rem.size(); ++j) {
      rem[k + j] = checked_add(rem[k + j], -checked_mul(quot[k], den[j]));
    }
  }
  return quot;
}

RationalFunctionSeries two_qubit_molien(int n) {
  RationalFunctionSeries s;
  s.numerator.assign(16, 0);
  for (auto [k, c] : {std::pair{0, 1}, {4, 1}, {5, 1}, {6, 3}, {7, 2}, {8, 2}, {9, 3},
                      {10, 1}, {11, 1}, {15, 1}}) {
    s.numerator[static_cast<std::size_t>(k)] = c;
  }
  s.denominator_factors = {{1, 1}, {2, 3}, {3, 2}, {4, 3}, {6, 1}};
  s.expansion = expand(s.numerator, s.denominator_factors, n);
  return s;
}

RationalFunctionSeries so2so2_free_series(int n) {
  RationalFunctionSeries s;
  s.numerator = {1};
  s.denominator_factors = {{1, 3}, {2, 2}};
  s.expansion = expand(s.numerator, s.denominator_factors, n);
  return s;
}

Degrees read_degrees(const RationalFunctionSeries& series) {
  Degrees d;
  for (const auto& f : series.denominator_factors) {
    d.primary.insert(d.primary.end(), static_cast<std::size_t>(f.multiplicity), f.degree);
  }
  std::sort(d.primary.begin(), d.primary.end());
  for (std::size_t k = 1; k < series.numerator.size(); ++k) {
    const auto c = series.numerator[k];
    if (c < 0) throw std::invalid_argument("negative numerator coefficient");
    d.secondary.insert(d.secondary.end(), static_cast<std::size_t>(c), static_cast<int>(k));
  }
  return d;
}

std::string RationalFunctionSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  os << "(";
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const auto c = numerator[k];
    if (c == 0) continue;
    os << (first ? "" : " + ");
    if (c != 1 || k == 0) os << c;
    if (k > 0) os << (c != 1 ? "*" : "") << "q" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  os << ") / (";
  first = true;
  for (const auto& f : denominator_factors) {
    os << (first ? "" : "*") << "(1 - q" << (f.degree > 1 ? "^" + std::to_string(f.degree) : "")
       << ")";
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace invar::molien
