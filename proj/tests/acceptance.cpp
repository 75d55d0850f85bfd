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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "invar/catalog.hpp"
#include "invar/groebner.hpp"
#include "invar/group.hpp"
#include "invar/molien.hpp"
#include "support.hpp"

namespace {

using namespace invar;

int failures = 0;

void verdict(const char* id, bool pass, const std::string& detail) {
  std::printf("%s %s %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("INVAR_FIXTURES"); env && *env) return env;
  return INVAR_FIXTURE_DIR;
}

std::vector<Polynomial> listed_syzygies() {
  std::ifstream in(fixture_dir() / "syzygies_37.json");
  const auto j = nlohmann::json::parse(in);
  std::vector<Polynomial> out;
  for (const auto& p : j.at("polynomials")) {
    out.push_back(parse_polynomial(p.get<std::string>(), catalog::y_context()));
  }
  return out;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks()) {
    if (!c.passed) return c.check + (c.witness ? ": " + *c.witness : "");
  }
  return "";
}

std::string describe(const Report& r) {
  std::string s = std::to_string(r.passed_count()) + "/" + std::to_string(r.size());
  if (!r.all_passed()) s += "; " + first_failure(r);
  return s;
}

void ac1(GroebnerBasis& gb) {
  Stopwatch sw;
  gb = catalog::syzygy_ideal();
  const double gb_ms = sw.elapsed_ms();
  const auto listed = listed_syzygies();
  const auto cmp = catalog::compare_with_listed(gb, listed);
  const double total_s = sw.elapsed_ms() / 1000.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu matched, %zu listed outside, %zu computed outside, GB %.0f ms, "
                "total %.2f s (limit 60 s)",
                cmp.exact_matches, cmp.listed, cmp.listed_not_in_computed.size(),
                cmp.computed_not_in_listed.size(), gb_ms, total_s);
  verdict("AC1", cmp.listed == 37 && cmp.equal() && total_s <= 60.0, buf);
}

void ac2(const GroebnerBasis& gb) {
  const auto dim = affine_dimension(gb);
  const std::vector<std::string> expected = {"y1", "y2", "y3", "y4", "y5"};
  // Independent cross-check: y1..y5 meet no leading monomial, and adding
  // any sixth variable does.
  bool maximal = true;
  for (const char* extra : {"y6", "y7", "y8", "y9", "y10", "y11", "y12"}) {
    auto six = expected;
    six.push_back(extra);
    maximal = maximal && !is_independent(gb, six);
  }
  std::string w;
  for (const auto& v : dim.witness) w += (w.empty() ? "" : ",") + v;
  verdict("AC2",
          dim.dimension == 5 && dim.witness == expected && is_independent(gb, expected) &&
              maximal,
          "dimension " + std::to_string(dim.dimension) + ", witness {" + w + "}");
}

void ac3() {
  std::set<std::string> nonzero;
  for (const auto& inv : catalog::build_catalog()) {
    if (!inv.restricted.is_zero()) nonzero.insert(inv.label.name());
  }
  const auto& names = catalog::y_assignment();
  const std::set<std::string> expected(names.begin(), names.end());
  const auto r = catalog::verify_restrictions();
  verdict("AC3", nonzero == expected && r.all_passed(),
          std::to_string(nonzero.size()) + " nonzero restrictions; closed forms " + describe(r));
}

void ac4() {
  const auto r = catalog::verify_table1();
  verdict("AC4", r.size() == 12 && r.all_passed(), "identities " + describe(r));
}

void ac5(const GroebnerBasis& gb) {
  const auto r = verify_parametric_solve(gb);
  verdict("AC5", r.size() == 7 && r.all_passed(), "relations in I_P " + describe(r));
}

void ac6(const GroebnerBasis& gb) {
  catalog::InjectivityOptions options;
  options.samples = 500;
  options.degree_bound = 3;
  const auto r = catalog::verify_injectivity(gb, options);
  verdict("AC6", r.all_passed(), r.checks().front().check);
}

void ac7() {
  group::SuiteOptions options;
  options.samples = 1000;
  options.seed = 42;
  options.tolerance = 1e-9;
  const auto local = group::verify_local_invariance(options);
  const auto gx = group::verify_gx_global_invariants(options);
  options.tolerance = 1e-10;
  const auto so2 = group::verify_so2so2(options);
  verdict("AC7", local.all_passed() && gx.all_passed() && so2.all_passed(),
          "local " + describe(local) + " (rel 1e-9), G_X " + describe(gx) +
              " (non-X < 1e-12, rel 1e-9), SO(2)xSO(2) " + describe(so2) + " (rel 1e-10)");
}

void ac8() {
  const auto r = group::verify_algebra_closure();
  verdict("AC8", r.size() == 22 && r.all_passed(),
          "rank-7 span plus 21 commutators " + describe(r) + " (residual < 1e-12)");
}

void ac9() {
  const auto series = molien::two_qubit_molien(2);
  const auto oracle = molien::long_division(series.numerator, series.denominator_factors, 2);
  const auto d = molien::read_degrees(molien::two_qubit_molien());
  const bool degrees = d.primary == std::vector<int>{1, 2, 2, 2, 3, 3, 4, 4, 4, 6} &&
                       d.secondary == std::vector<int>{4, 5, 6, 6, 6, 7, 7, 8, 8, 9, 9, 9,
                                                       10, 11, 15};
  const bool coeffs = series.expansion == oracle &&
                      series.expansion == molien::Coefficients{1, 1, 4};
  verdict("AC9", degrees && coeffs,
          std::to_string(d.primary.size()) + " primary, " + std::to_string(d.secondary.size()) +
              " secondary; d0..d2 = " + std::to_string(series.expansion[0]) + "," +
              std::to_string(series.expansion[1]) + "," + std::to_string(series.expansion[2]));
}

bool ring_axioms() {
  std::mt19937_64 rng(101);
  for (auto order : {MonomialOrder::kLex, MonomialOrder::kGrlex, MonomialOrder::kGrevlex}) {
    const auto ctx = VarContext::create({"u", "v", "w", "t"}, order);
    for (int i = 0; i < 100; ++i) {
      const auto a = invar::testing::random_polynomial(ctx, rng);
      const auto b = invar::testing::random_polynomial(ctx, rng);
      const auto c = invar::testing::random_polynomial(ctx, rng);
      if (!(a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
            a * (b + c) == a * b + a * c && (a + b) + c == a + (b + c) && (a - a).is_zero())) {
        return false;
      }
    }
  }
  return true;
}

bool gb_uniqueness() {
  const Ideal jp = catalog::elimination_input();
  const auto ref = buchberger(jp);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    auto gens = jp.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.front() *= Rational(-3, 2);
    if (buchberger(Ideal(jp.context(), gens)).basis != ref.basis) return false;
  }
  return true;
}

bool elimination_soundness(const GroebnerBasis& gb) {
  return std::all_of(gb.basis.begin(), gb.basis.end(),
                     [](const Polynomial& g) { return catalog::is_syzygy(g); });
}

bool jacobian_rank() {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 20; ++i) {
    if (catalog::generator_jacobian_rank(invar::testing::random_point(7, rng)) != 5) return false;
  }
  return true;
}

void ac10(const GroebnerBasis& gb) {
  const bool axioms = ring_axioms();
  const bool unique = gb_uniqueness();
  const bool sound = elimination_soundness(gb);
  const bool rank = jacobian_rank();
  const auto flag = [](bool b) { return b ? "ok" : "FAILED"; };
  verdict("AC10", axioms && unique && sound && rank,
          std::string("ring axioms ") + flag(axioms) + ", GB uniqueness " + flag(unique) +
              ", elimination soundness " + flag(sound) + ", Jacobian rank 5 " + flag(rank));
}

}  // namespace

int main() {
  GroebnerBasis gb;
  ac1(gb);
  ac2(gb);
  ac3();
  ac4();
  ac5(gb);
  ac6(gb);
  ac7();
  ac8();
  ac9();
  ac10(gb);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
