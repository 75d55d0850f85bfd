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

#include "invar/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace invar::catalog {

namespace {

const std::vector<std::string> kXNames = {"alpha", "beta", "gamma", "c11",
                                          "c12",   "c21",  "c22"};
const std::vector<std::string> kYNames = {"y1", "y2", "y3", "y4",  "y5",  "y6",
                                          "y7", "y8", "y9", "y10", "y11", "y12"};
const std::vector<std::string> kYPrecedence = {"y12", "y11", "y10", "y8",
                                               "y9",  "y7",  "y6",  "y5",
                                               "y4",  "y3",  "y2",  "y1"};

std::vector<std::string> fano_names() {
  std::vector<std::string> names = {"a1", "a2", "a3", "b1", "b2", "b3"};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      names.push_back("c" + std::to_string(i) + std::to_string(j));
    }
  }
  return names;
}

struct Factor {
  char tensor;  // 'a', 'b', 'c' or 'e' (Levi-Civita)
  std::string indices;
};

std::vector<Factor> parse_formula(std::string_view formula) {
  std::vector<Factor> factors;
  std::size_t pos = 0;
  const auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(what) + " in formula '" +
                                std::string(formula) + "'");
  };
  while (pos < formula.size()) {
    if (std::isspace(static_cast<unsigned char>(formula[pos]))) {
      ++pos;
      continue;
    }
    const auto open = formula.find('[', pos);
    const auto close = formula.find(']', pos);
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close < open) {
      fail("expected name[indices]");
    }
    const auto name = formula.substr(pos, open - pos);
    Factor f{};
    f.indices = std::string(formula.substr(open + 1, close - open - 1));
    if (name == "eps") {
      f.tensor = 'e';
      if (f.indices.size() != 3) fail("eps needs three indices");
    } else if (name == "a" || name == "b") {
      f.tensor = name.front();
      if (f.indices.size() != 1) fail("vectors take one index");
    } else if (name == "c") {
      f.tensor = 'c';
      if (f.indices.size() != 2) fail("c takes two indices");
    } else {
      fail("unknown tensor");
    }
    factors.push_back(std::move(f));
    pos = close + 1;
  }
  return factors;
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2).
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Polynomial table_expression(std::string_view text) {
  return parse_polynomial(text, generator_context());
}

struct CatalogEntry {
  DegreeLabel label;
  const char* formula;
  Rational prefactor;
};

std::vector<CatalogEntry> catalog_entries() {
  // Greek summation indices are written as capitals: A=alpha, B=beta,
  // G=gamma, D=delta, R=rho, S=sigma.
  return {
      {{0, 0, 2}, "c[ij] c[ij]", 1},
      {{2, 0, 0}, "a[i] a[i]", 1},
      {{0, 2, 0}, "b[i] b[i]", 1},
      {{0, 0, 3}, "eps[ijk] eps[ABG] c[iA] c[jB] c[kG]", Rational(1, 6)},
      {{1, 1, 1}, "a[i] c[ij] b[j]", 1},
      {{0, 0, 4}, "c[iA] c[iB] c[jA] c[jB]", 1},
      {{2, 0, 2}, "a[i] a[j] c[iA] c[jA]", 1},
      {{0, 2, 2}, "b[A] b[B] c[iA] c[iB]", 1},
      {{1, 1, 2}, "eps[ijk] eps[ABG] a[i] b[A] c[jB] c[kG]", Rational(1, 2)},
      {{1, 1, 3}, "a[i] c[iA] c[BA] c[Bj] b[j]", 1},
      {{1, 2, 3}, "eps[ijk] b[i] c[Aj] a[A] c[Bk] c[Bl] b[l]", 1},
      {{2, 0, 4}, "a[i] c[iA] c[jA] c[jB] c[kB] a[k]", 1},
      {{0, 2, 4}, "b[i] c[Ai] c[Aj] c[Bj] c[Bk] b[k]", 1},
      {{2, 1, 3}, "eps[ABG] a[A] c[Bi] b[i] c[Gj] c[Dj] a[D]", 1},
      // The last factor pair is contracted as c[Gl] a[G]; see catalog_notes().
      {{2, 1, 4}, "eps[ijk] b[i] c[Aj] a[A] c[Bk] c[Bl] c[Gl] a[G]", 1},
      {{1, 2, 4}, "eps[ABG] a[A] c[Bj] b[j] c[Gk] c[Dk] c[Dl] b[l]", 1},
      {{1, 2, 5}, "eps[ijk] b[i] c[Aj] c[Al] b[l] c[Bk] c[Bm] c[Gm] a[G]", 1},
      {{2, 1, 5}, "eps[ABG] a[A] c[Bi] c[Di] a[D] c[Gk] c[Rk] c[Rl] b[l]", 1},
      {{3, 0, 6},
       "eps[ABG] a[A] c[Bi] c[Di] a[D] c[Gj] c[Rj] c[Rk] c[Sk] a[S]", 1},
      {{0, 3, 6},
       "eps[ijk] b[i] c[Aj] c[Al] b[l] c[Bk] c[Bm] c[Gm] c[Gs] b[s]", 1},
  };
}

}  // namespace

ContextPtr fano_context() {
  static const ContextPtr ctx = VarContext::create(fano_names());
  return ctx;
}

ContextPtr x_context() {
  static const ContextPtr ctx = VarContext::create(kXNames);
  return ctx;
}

ContextPtr y_context() {
  static const ContextPtr ctx =
      VarContext::create(kYNames, MonomialOrder::kLex, kYPrecedence);
  return ctx;
}

ContextPtr elimination_context() {
  static const ContextPtr ctx = [] {
    std::vector<std::string> names = {"c11", "c12", "c21", "c22",
                                      "alpha", "beta", "gamma"};
    names.insert(names.end(), kYPrecedence.begin(), kYPrecedence.end());
    return VarContext::create(names, MonomialOrder::kLex);
  }();
  return ctx;
}

ContextPtr generator_context() {
  static const ContextPtr ctx =
      VarContext::create({"F1", "G1", "G2", "G3", "G4"});
  return ctx;
}

std::string DegreeLabel::name() const {
  return "C" + std::to_string(a) + std::to_string(b) + std::to_string(c);
}

Polynomial contract(std::string_view formula, const Rational& prefactor) {
  const auto factors = parse_formula(formula);
  const auto ctx = fano_context();

  std::string symbols;
  for (const auto& f : factors) {
    for (char ch : f.indices) {
      if (symbols.find(ch) == std::string::npos) symbols.push_back(ch);
    }
  }
  const auto slot = [&](char ch) { return symbols.find(ch); };

  std::vector<Term> terms;
  std::vector<int> value(symbols.size(), 0);
  for (;;) {
    int sign = 1;
    Monomial m(ctx->arity());
    for (const auto& f : factors) {
      const auto idx = [&](std::size_t k) { return value[slot(f.indices[k])]; };
      std::size_t var = 0;
      switch (f.tensor) {
        case 'e':
          sign *= levi_civita(idx(0), idx(1), idx(2));
          continue;
        case 'a':
          var = static_cast<std::size_t>(idx(0));
          break;
        case 'b':
          var = 3 + static_cast<std::size_t>(idx(0));
          break;
        default:
          var = 6 + static_cast<std::size_t>(3 * idx(0) + idx(1));
          break;
      }
      m.set(var, m[var] + 1);
    }
    if (sign != 0) terms.push_back({m, prefactor * sign});

    std::size_t k = 0;
    while (k < value.size() && ++value[k] == 3) value[k++] = 0;
    if (k == value.size()) break;
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

const std::vector<QuesneInvariant>& build_catalog() {
  static const std::vector<QuesneInvariant> catalog = [] {
    std::vector<QuesneInvariant> out;
    for (const auto& entry : catalog_entries()) {
      Polynomial full = contract(entry.formula, entry.prefactor);
      Polynomial restricted = restrict_to_x(full);
      out.push_back({entry.label, entry.formula, std::move(full),
                     std::move(restricted)});
    }
    return out;
  }();
  return catalog;
}

const QuesneInvariant& invariant(std::string_view name) {
  for (const auto& inv : build_catalog()) {
    if (inv.label.name() == name) return inv;
  }
  throw std::invalid_argument("no invariant named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_notes() {
  return {
      "C214: the source formula ends in c[Gl] a[l], which repeats the summed "
      "index l three times; it is contracted as c[Gl] a[G], the only "
      "well-formed reading of degree (2,1,4).",
      "C113: the middle factor is taken as written, c[iA] c[BA] c[Bj].",
      "c[ij] carries the a-side (first qubit) index first.",
  };
}

Polynomial restrict_to_x(const Polynomial& full) {
  require_same_context(full.context(), fano_context());
  const auto x = x_context();
  const Polynomial zero(x);
  const auto var = [&](const char* name) { return Polynomial::variable(x, name); };
  const std::map<std::string, Polynomial> images = {
      {"a1", zero},           {"a2", zero},         {"a3", var("alpha")},
      {"b1", zero},           {"b2", zero},         {"b3", var("beta")},
      {"c11", var("c11")},    {"c12", var("c12")},  {"c13", zero},
      {"c21", var("c21")},    {"c22", var("c22")},  {"c23", zero},
      {"c31", zero},          {"c32", zero},        {"c33", var("gamma")},
  };
  return full.substitute(images, x);
}

const std::array<std::string, 12>& y_assignment() {
  static const std::array<std::string, 12> names = {
      "C200", "C020", "C002", "C111", "C003", "C202",
      "C022", "C004", "C112", "C113", "C204", "C024"};
  return names;
}

std::vector<Polynomial> restricted_in_y_order() {
  std::vector<Polynomial> out;
  for (const auto& name : y_assignment()) out.push_back(invariant(name).restricted);
  return out;
}

FreeGenerators free_generators() {
  const auto x = x_context();
  const auto v = [&](const char* name) { return Polynomial::variable(x, name); };
  const Polynomial x1 = v("c11") - v("c22");
  const Polynomial x2 = v("c12") + v("c21");
  const Polynomial x3 = v("alpha") + v("beta");
  const Polynomial y1 = v("c11") + v("c22");
  const Polynomial y2 = v("c12") - v("c21");
  const Polynomial y3 = v("beta") - v("alpha");
  return {v("gamma"), x3 + y3, x3 - y3, x1 * x1 + x2 * x2, y1 * y1 + y2 * y2};
}

const std::vector<Polynomial>& generator_expansions() {
  static const std::vector<Polynomial> rows = [] {
    const char* kRows[] = {
        "G2^2/4",                              // C200
        "G1^2/4",                              // C020
        "(G3 + G4)/2 + F1^2",                  // C002
        "G1*G2*F1/4",                          // C111
        "F1*(G4 - G3)/4",                      // C003
        "G2^2*F1^2/4",                         // C202
        "G1^2*F1^2/4",                         // C022
        "(G3 + G4)^2/8 + G3*G4/2 + F1^4",      // C004
        "G1*G2*(G4 - G3)/16",                  // C112
        "G1*G2*F1^3/4",                        // C113
        "G2^2*F1^4/4",                         // C204
        "G1^2*F1^4/4",                         // C024
    };
    std::vector<Polynomial> out;
    for (const char* row : kRows) out.push_back(table_expression(row));
    return out;
  }();
  return rows;
}

Polynomial phi(const Polynomial& p) {
  require_same_context(p.context(), y_context());
  return p.substitute(std::span<const Polynomial>(generator_expansions()),
                      generator_context());
}

Ideal elimination_input() {
  const auto ctx = elimination_context();
  const auto restricted = restricted_in_y_order();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    gens.push_back(restricted[i].rename_into(ctx) -
                   Polynomial::variable(ctx, kYNames[i]));
  }
  return Ideal(ctx, std::move(gens));
}

GroebnerBasis syzygy_ideal(const GroebnerOptions& options, GroebnerStats* stats) {
  const GroebnerBasis full = buchberger(elimination_input(), options, stats);
  const auto kept = elimination_ideal(full, kYNames);
  const auto y = y_context();
  std::vector<Polynomial> basis;
  for (const auto& g : kept) basis.push_back(g.rename_into(y));
  // A subset of a reduced basis supported on the kept variables is itself
  // reduced for the induced order.
  return GroebnerBasis{y, std::move(basis), true};
}

bool is_syzygy(const Polynomial& p) {
  require_same_context(p.context(), y_context());
  const auto images = restricted_in_y_order();
  return p.substitute(std::span<const Polynomial>(images), x_context()).is_zero();
}

Report verify_table1() {
  Report report;
  const auto gens = free_generators().as_array();
  const auto& rows = generator_expansions();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Stopwatch sw;
    const auto& inv = invariant(y_assignment()[i]);
    const Polynomial expanded =
        rows[i].substitute(std::span<const Polynomial>(gens), x_context());
    const bool ok = expanded == inv.restricted;
    report.add("table1 " + inv.label.name(), ok,
               inv.label.name() + " = " + rows[i].to_string(), sw.elapsed_ms());
  }
  return report;
}

Report verify_restrictions() {
  static const std::map<std::string, std::string> kClosedForms = {
      {"C200", "alpha^2"},
      {"C020", "beta^2"},
      {"C002", "c11^2 + c12^2 + c21^2 + c22^2 + gamma^2"},
      {"C111", "alpha*beta*gamma"},
      {"C003", "gamma*(c11*c22 - c12*c21)"},
      {"C202", "alpha^2*gamma^2"},
      {"C022", "beta^2*gamma^2"},
      {"C112", "alpha*beta*(c11*c22 - c12*c21)"},
      {"C004",
       "(c11^2 + c12^2 + c21^2 + c22^2)^2 - 2*(c11*c22 - c12*c21)^2 + gamma^4"},
      {"C113", "alpha*beta*gamma^3"},
      {"C204", "alpha^2*gamma^4"},
      {"C024", "beta^2*gamma^4"},
  };
  Report report;
  for (const auto& inv : build_catalog()) {
    const auto name = inv.label.name();
    const auto it = kClosedForms.find(name);
    const Polynomial expected = it == kClosedForms.end()
                                    ? Polynomial(x_context())
                                    : parse_polynomial(it->second, x_context());
    report.add("restriction " + name, inv.restricted == expected,
               inv.restricted.to_string());
  }
  return report;
}

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, int degree_bound,
                             std::size_t max_terms) {
  const auto y = y_context();
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<int> degree(0, degree_bound);
  std::uniform_int_distribution<std::size_t> var(0, y->arity() - 1);
  std::vector<Term> out;
  const auto count = terms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m(y->arity());
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) {
      const auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    out.push_back({m, coeff(rng)});
  }
  return Polynomial::from_terms(y, std::move(out));
}

}  // namespace

Report verify_injectivity(const GroebnerBasis& syzygies,
                          const InjectivityOptions& options) {
  require_same_context(syzygies.context, y_context());
  Report report;
  Stopwatch sw;
  std::mt19937_64 rng(options.seed);
  const auto y = y_context();

  // Syzygies of low degree, used to plant ideal members among the samples.
  std::vector<Polynomial> low;
  for (const auto& g : syzygies.basis) {
    if (g.total_degree() <= options.degree_bound) low.push_back(g);
  }

  std::size_t members = 0;
  std::size_t counterexamples = 0;
  std::string first_counterexample;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Polynomial p(y);
    if (s % 2 == 1 && !low.empty()) {
      // Random combination of syzygies with multipliers that keep the degree
      // within the bound.
      std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
      std::uniform_int_distribution<int> coeff(-5, 5);
      for (int k = 0; k < 3; ++k) {
        const auto& g = low[pick(rng)];
        const int room = options.degree_bound - g.total_degree();
        Polynomial mult = room > 0 ? random_polynomial(rng, room, 2)
                                   : Polynomial::constant(y, coeff(rng));
        p += mult * g;
      }
      if (s % 4 == 3) p += random_polynomial(rng, options.degree_bound, 3);
    } else {
      p = random_polynomial(rng, options.degree_bound, 4);
    }
    const bool member = ideal_member(p, syzygies);
    const bool kernel = phi(p).is_zero();
    if (member) ++members;
    if (member != kernel) {
      if (counterexamples++ == 0) first_counterexample = p.to_string();
    }
  }
  report.add("injectivity phi(p)=0 <=> p in I (" +
                 std::to_string(options.samples) + " samples, " +
                 std::to_string(members) + " members)",
             counterexamples == 0,
             counterexamples == 0 ? std::optional<std::string>{}
                                  : std::optional<std::string>{first_counterexample},
             sw.elapsed_ms());
  return report;
}

int generator_jacobian_rank(std::span<const Rational> point) {
  const auto gens = free_generators().as_array();
  const auto n = x_context()->arity();
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    std::vector<Rational> row;
    for (std::size_t v = 0; v < n; ++v) row.push_back(g.derivative(v).evaluate(point));
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over Q.
  int rank = 0;
  for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

IdealComparison compare_with_listed(const GroebnerBasis& computed,
                                    std::span<const Polynomial> listed,
                                    const GroebnerOptions& options) {
  IdealComparison cmp;
  cmp.listed = listed.size();
  std::vector<Polynomial> normalized_computed;
  for (const auto& g : computed.basis) normalized_computed.push_back(g.primitive());
  for (const auto& p : listed) {
    const Polynomial n = p.primitive();
    if (std::find(normalized_computed.begin(), normalized_computed.end(), n) !=
        normalized_computed.end()) {
      ++cmp.exact_matches;
    }
    if (!ideal_member(p, computed)) cmp.listed_not_in_computed.push_back(p.to_string());
  }
  const GroebnerBasis listed_gb = buchberger(
      Ideal(computed.context, std::vector<Polynomial>(listed.begin(), listed.end())),
      options);
  for (const auto& g : computed.basis) {
    if (!ideal_member(g, listed_gb)) cmp.computed_not_in_listed.push_back(g.to_string());
  }
  return cmp;
}

}  // namespace invar::catalog
