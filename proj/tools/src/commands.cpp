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

#include "invar/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "invar/catalog.hpp"
#include "invar/groebner.hpp"
#include "invar/group.hpp"
#include "invar/molien.hpp"
#include "invar/poly_json.hpp"

#ifndef INVAR_DEFAULT_FIXTURE_DIR
#define INVAR_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace invar::cli {

namespace {

using nlohmann::json;

constexpr const char* kSyzygyFixture = "syzygies_37.json";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

GroebnerOptions groebner_options(const RunConfig& config) {
  GroebnerOptions options;
  options.pair_budget = config.pair_budget;
  return options;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

int exit_code_for(const Report& report) {
  return report.all_passed() ? kExitPass : kExitMismatch;
}

void render(const RunConfig& config, CommandOutcome& outcome) {
  if (config.format == Format::kText) {
    outcome.rendered = outcome.text_summary + outcome.report.to_text(config.timing);
    return;
  }
  json j = {{"command", config.command},
            {"checks", outcome.report.to_json(config.timing)},
            {"summary", std::to_string(outcome.report.passed_count()) + "/" +
                            std::to_string(outcome.report.size()) + " checks passed"}};
  if (!outcome.result.is_null()) j["result"] = outcome.result;
  outcome.rendered = j.dump(2) + "\n";
}

// Polynomials of a syzygy list file over catalog::y_context().
std::vector<Polynomial> load_listed(const std::filesystem::path& path) {
  const json j = read_json(path);
  const auto y = catalog::y_context();
  if (j.contains("vars")) {
    const auto file_ctx = context_from_json(j);
    if (!file_ctx->same_as(*y)) {
      throw UsageError(path.string() + ": variables or order differ from y1..y12 under lex");
    }
  }
  if (!j.contains("polynomials") || !j["polynomials"].is_array()) {
    throw UsageError(path.string() + ": no \"polynomials\" array");
  }
  std::vector<Polynomial> out;
  for (const auto& p : j["polynomials"]) out.push_back(polynomial_from_json(p, y));
  return out;
}

}  // namespace

std::optional<std::string> validate(const RunConfig& config) {
  if (!(config.tolerance > 0)) return "--tol must be positive";
  if (config.samples < 1) return "--samples must be at least 1";
  if (config.series_terms < 0) return "--terms must be nonnegative";
  if (config.pair_budget < 1) return "--pair-budget must be at least 1";
  if (config.order) {
    try {
      parse_order(*config.order);
    } catch (const std::exception& e) {
      return e.what();
    }
  }
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    return "unknown command '" + config.command + "'";
  }
  return std::nullopt;
}

std::filesystem::path fixture_directory(const RunConfig& config) {
  if (config.fixture_dir) return *config.fixture_dir;
  if (const char* env = std::getenv("INVAR_FIXTURES"); env && *env) return env;
  return INVAR_DEFAULT_FIXTURE_DIR;
}

CommandOutcome cmd_verify_syzygies(const RunConfig& config) {
  const auto path = config.listed.value_or(fixture_directory(config) / kSyzygyFixture);
  const auto listed = load_listed(path);

  CommandOutcome outcome;
  Stopwatch sw;
  GroebnerStats stats;
  const GroebnerBasis gb = catalog::syzygy_ideal(groebner_options(config), &stats);
  const double gb_ms = sw.elapsed_ms();

  Stopwatch syz_sw;
  std::vector<std::string> not_syzygies;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (!catalog::is_syzygy(listed[i])) {
      not_syzygies.push_back("#" + std::to_string(i + 1) + " " + listed[i].to_string());
    }
  }
  outcome.report.add("listed polynomials vanish on the invariants", not_syzygies.empty(),
                     not_syzygies.empty()
                         ? std::to_string(listed.size()) + " syzygies"
                         : "not a syzygy: " + join(not_syzygies, "; "),
                     syz_sw.elapsed_ms());

  Stopwatch cmp_sw;
  const auto cmp = catalog::compare_with_listed(gb, listed, groebner_options(config));
  const double per = cmp_sw.elapsed_ms() / 2.0;
  // Name listed entries by position so a mismatch points at the fixture line.
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const auto s = listed[i].to_string();
    if (std::find(cmp.listed_not_in_computed.begin(), cmp.listed_not_in_computed.end(), s) !=
        cmp.listed_not_in_computed.end()) {
      missing.push_back("#" + std::to_string(i + 1) + " " + s);
    }
  }
  outcome.report.add("listed polynomials reduce to zero modulo the computed basis",
                     missing.empty(),
                     missing.empty() ? std::to_string(cmp.listed) + " of " +
                                           std::to_string(cmp.listed) + " reduce to zero"
                                     : "nonzero remainder: " + join(missing, "; "),
                     per);
  outcome.report.add("computed basis reduces to zero modulo the listed ideal",
                     cmp.computed_not_in_listed.empty(),
                     cmp.computed_not_in_listed.empty()
                         ? std::to_string(gb.basis.size()) + " of " +
                               std::to_string(gb.basis.size()) + " reduce to zero"
                         : "outside the listed ideal: " + join(cmp.computed_not_in_listed, "; "),
                     per);
  std::ostringstream summary;
  summary << cmp.exact_matches << "/" << cmp.listed << " matched, ideal equality "
          << (cmp.equal() ? "confirmed" : "refuted");
  outcome.report.add("syzygy ideal equality", cmp.equal(), summary.str(), gb_ms);
  outcome.report.append(verify_parametric_solve(gb));

  json basis = json::array();
  for (const auto& g : gb.basis) basis.push_back(g.to_string());
  outcome.result = {{"listed_file", path.filename().string()},
                    {"listed", cmp.listed},
                    {"exact_matches", cmp.exact_matches},
                    {"computed_size", gb.basis.size()},
                    {"pairs_reduced", stats.pairs_reduced},
                    {"pairs_pruned", stats.pairs_pruned},
                    {"zero_reductions", stats.zero_reductions},
                    {"basis", basis}};
  outcome.text_summary = "syzygy ideal: " + std::to_string(gb.basis.size()) +
                         " generators, " + std::to_string(stats.pairs_reduced) +
                         " S-pairs reduced\n" + summary.str() + "\n";
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

CommandOutcome cmd_groebner(const RunConfig& config) {
  if (!config.input) throw UsageError("groebner needs --input <ideal.json>");
  const json j = read_json(*config.input);
  Ideal ideal = ideal_from_json(j);
  if (ideal.generators().empty()) {
    throw UsageError("empty generator list: nothing to compute");
  }
  if (config.order) {
    const auto ctx = ideal.context()->with_order(parse_order(*config.order),
                                                 ideal.context()->precedence());
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.rename_into(ctx));
    ideal = Ideal(ctx, std::move(gens));
  }

  CommandOutcome outcome;
  Stopwatch sw;
  GroebnerStats stats;
  const GroebnerBasis gb = buchberger(ideal, groebner_options(config), &stats);
  outcome.report.add("reduced groebner basis", true,
                     std::to_string(gb.basis.size()) + " elements in " +
                         std::to_string(gb.context->arity()) + " variables",
                     sw.elapsed_ms());
  if (config.format == Format::kText) {
    std::ostringstream os;
    for (const auto& g : gb.basis) os << g.to_string() << "\n";
    outcome.rendered = os.str();
  } else {
    json out = to_json(gb);
    out["stats"] = {{"pairs_created", stats.pairs_created},
                    {"pairs_reduced", stats.pairs_reduced},
                    {"pairs_pruned", stats.pairs_pruned},
                    {"zero_reductions", stats.zero_reductions}};
    outcome.rendered = out.dump(2) + "\n";
  }
  return outcome;
}

CommandOutcome cmd_dim(const RunConfig& config) {
  CommandOutcome outcome;
  Stopwatch sw;
  const GroebnerBasis gb = catalog::syzygy_ideal(groebner_options(config));
  const auto dim = affine_dimension(gb);
  const std::string set = "{" + join(dim.witness, ", ") + "}";
  outcome.report.add("dimension of the syzygy ideal is 5", dim.dimension == 5,
                     "dimension " + std::to_string(dim.dimension) + ", independent set " + set,
                     sw.elapsed_ms());
  Stopwatch ind_sw;
  const std::vector<std::string> params = {"y1", "y2", "y3", "y4", "y5"};
  outcome.report.add("y1..y5 independent modulo the ideal", is_independent(gb, params),
                     std::nullopt, ind_sw.elapsed_ms());
  outcome.result = {{"dimension", dim.dimension}, {"witness", dim.witness}};
  outcome.text_summary = "dimension " + std::to_string(dim.dimension) + ", witness " + set + "\n";
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

CommandOutcome cmd_table1(const RunConfig&) {
  CommandOutcome outcome;
  outcome.report = catalog::verify_table1();
  json rows = json::array();
  const auto& exps = catalog::generator_expansions();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    rows.push_back({{"y", "y" + std::to_string(i + 1)},
                    {"invariant", catalog::y_assignment()[i]},
                    {"expansion", exps[i].to_string()}});
  }
  outcome.result = {{"rows", rows}};
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

CommandOutcome cmd_check_invariance(const RunConfig& config) {
  group::SuiteOptions options;
  options.samples = config.samples;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  group::SuiteOptions so2 = options;
  so2.tolerance = std::min(config.tolerance, 1e-10);

  CommandOutcome outcome;
  outcome.report.append(group::verify_algebra_closure());
  outcome.report.append(group::verify_local_invariance(options));
  outcome.report.append(group::verify_gx_global_invariants(options));
  outcome.report.append(group::verify_so2so2(so2));
  outcome.result = {{"seed", config.seed},
                    {"samples", config.samples},
                    {"tolerance", config.tolerance},
                    {"so2xso2_tolerance", so2.tolerance},
                    {"so2xso2_convention", group::so2so2_convention()}};
  outcome.text_summary = "so2 x so2 convention: " + group::so2so2_convention() + "\n";
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

CommandOutcome cmd_molien(const RunConfig& config) {
  CommandOutcome outcome;
  const auto series = molien::two_qubit_molien(config.series_terms);
  const auto oracle =
      molien::long_division(series.numerator, series.denominator_factors, config.series_terms);
  outcome.report.add("expansion agrees with long division", series.expansion == oracle,
                     std::to_string(series.expansion.size()) + " coefficients");
  const auto degrees = molien::read_degrees(series);
  std::int64_t at_one = 0;
  for (auto c : series.numerator) at_one += c;
  outcome.report.add("numerator at q = 1 equals 1 + #secondaries",
                     at_one == static_cast<std::int64_t>(1 + degrees.secondary.size()),
                     "N(1) = " + std::to_string(at_one));
  const auto free_series = molien::so2so2_free_series(config.series_terms);

  outcome.result = {
      {"function", series.to_string()},
      {"coefficients", series.expansion},
      {"primary_degrees", degrees.primary},
      {"secondary_degrees", degrees.secondary},
      {"remarks",
       {"Derived remark, not checked: free generation of the SO(2)xSO(2) invariants in degrees "
        "1,1,1,2,2 implies the series " +
        free_series.to_string()}},
      {"so2xso2_free_coefficients", free_series.expansion}};

  std::ostringstream os;
  os << "M(q) = " << series.to_string() << "\n";
  os << "primary degrees:";
  for (int d : degrees.primary) os << " " << d;
  os << "\nsecondary degrees:";
  for (int d : degrees.secondary) os << " " << d;
  os << "\n   k  d_k\n";
  for (std::size_t k = 0; k < series.expansion.size(); ++k) {
    os << std::setw(4) << k << "  " << series.expansion[k] << "\n";
  }
  os << "remark (derived): SO(2)xSO(2) free series " << free_series.to_string() << "\n";
  outcome.text_summary = os.str();
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

CommandOutcome cmd_catalog(const RunConfig& config) {
  CommandOutcome outcome;
  if (config.dump_ideal) {
    const Ideal jp = catalog::elimination_input();
    json j = context_to_json(*jp.context());
    json gens = json::array();
    for (const auto& g : jp.generators()) gens.push_back(g.to_string());
    j["generators"] = std::move(gens);
    outcome.rendered = j.dump(2) + "\n";
    return outcome;
  }
  outcome.report = catalog::verify_restrictions();
  json entries = json::array();
  std::map<int, std::vector<const catalog::QuesneInvariant*>> by_degree;
  for (const auto& inv : catalog::build_catalog()) {
    by_degree[inv.label.total()].push_back(&inv);
    entries.push_back({{"name", inv.label.name()},
                       {"degrees", {inv.label.a, inv.label.b, inv.label.c}},
                       {"formula", inv.formula},
                       {"terms", inv.full.size()},
                       {"polynomial", inv.full.to_string()},
                       {"restricted", inv.restricted.to_string()}});
  }
  outcome.result = {{"invariants", entries}, {"notes", catalog::catalog_notes()}};
  std::ostringstream os;
  for (const auto& [degree, invs] : by_degree) {
    os << "degree " << degree << "\n";
    for (const auto* inv : invs) {
      os << "  " << inv->label.name() << "  " << inv->full.size() << " terms  "
         << inv->formula << "\n      on X-states: " << inv->restricted.to_string() << "\n";
    }
  }
  outcome.text_summary = os.str();
  outcome.exit_code = exit_code_for(outcome.report);
  return outcome;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "verify-syzygies", "groebner", "dim", "table1", "check-invariance", "molien", "catalog"};
  return names;
}

CommandOutcome run(const RunConfig& config) {
  CommandOutcome outcome;
  const auto fail = [&](const std::string& kind, const std::string& message) {
    outcome = {};
    outcome.exit_code = kExitUsage;
    outcome.report.add(kind, false, message);
    render(config, outcome);
  };
  if (auto error = validate(config)) {
    fail("usage", *error);
    return outcome;
  }
  try {
    const std::string& c = config.command;
    if (c == "verify-syzygies") outcome = cmd_verify_syzygies(config);
    if (c == "groebner") outcome = cmd_groebner(config);
    if (c == "dim") outcome = cmd_dim(config);
    if (c == "table1") outcome = cmd_table1(config);
    if (c == "check-invariance") outcome = cmd_check_invariance(config);
    if (c == "molien") outcome = cmd_molien(config);
    if (c == "catalog") outcome = cmd_catalog(config);
    if (outcome.rendered.empty()) render(config, outcome);
  } catch (const ResourceLimitExceeded& e) {
    fail("resource limit", e.what());
  } catch (const std::exception& e) {
    fail("usage", e.what());
  }
  return outcome;
}

}  // namespace invar::cli
