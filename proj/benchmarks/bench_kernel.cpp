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

#include <benchmark/benchmark.h>

#include <random>

#include "invar/catalog.hpp"
#include "invar/groebner.hpp"
#include "invar/group.hpp"
#include "invar/molien.hpp"

namespace {

using namespace invar;

Polynomial dense(const ContextPtr& ctx, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Term> terms;
  const auto n = ctx->arity();
  std::vector<int> e(n, 0);
  // All monomials of total degree <= degree in n variables.
  const auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == n) {
      terms.push_back({Monomial(n, e), Rational(coeff(rng))});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, degree);
  return Polynomial::from_terms(ctx, std::move(terms));
}

void BM_Multiply(benchmark::State& state) {
  const auto ctx = VarContext::create({"w", "x", "y", "z"}, MonomialOrder::kGrevlex);
  const auto p = dense(ctx, static_cast<int>(state.range(0)), 1);
  const auto q = dense(ctx, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_Multiply)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_NormalForm(benchmark::State& state) {
  const auto gb = catalog::syzygy_ideal();
  const auto y = catalog::y_context();
  const auto p = dense(y, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, gb.basis));
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMicrosecond);

void BM_SyzygyBasis(benchmark::State& state) {
  const Ideal jp = catalog::elimination_input();
  GroebnerStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(jp, {}, &stats));
  state.counters["pairs"] = static_cast<double>(stats.pairs_reduced);
}
BENCHMARK(BM_SyzygyBasis)->Unit(benchmark::kMillisecond);

void BM_CatalogExpansion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(catalog::contract(
        "eps[ABG] a[A] c[Bi] c[Di] a[D] c[Gj] c[Rj] c[Rk] c[Sk] a[S]"));
  }
}
BENCHMARK(BM_CatalogExpansion)->Unit(benchmark::kMillisecond);

void BM_GxElement(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto omega = group::random_angles(rng);
  for (auto _ : state) benchmark::DoNotOptimize(group::gx_element(omega));
}
BENCHMARK(BM_GxElement);

void BM_MolienSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(molien::two_qubit_molien(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_MolienSeries)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
