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

#include <random>
#include <vector>

#include "invar/polynomial.hpp"

namespace invar::testing {

// Random polynomial with up to `terms` terms of total degree <= max_degree
// and small integer-over-small-integer coefficients.
inline Polynomial random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng,
                                    int terms = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<std::size_t> var(0, ctx->arity() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx->arity());
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      const auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    out.push_back({m, Rational(num(rng), den(rng))});
  }
  return Polynomial::from_terms(ctx, std::move(out));
}

inline std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng,
                                          int range = 7) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(num(rng), den(rng));
  for (auto& r : p) r.canonicalize();
  return p;
}

}  // namespace invar::testing
