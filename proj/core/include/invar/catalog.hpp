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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invar/groebner.hpp"
#include "invar/polynomial.hpp"
#include "invar/report.hpp"

namespace invar::catalog {

// Fano coordinates a1..a3, b1..b3, c11..c33 of a two-qubit state.
ContextPtr fano_context();
// Coordinates alpha=a3, beta=b3, gamma=c33, c11, c12, c21, c22 of X-states.
ContextPtr x_context();
// y1..y12 with the elimination precedence y12 > y11 > y10 > y8 > y9 > y7 >
// y6 > ... > y1 under lex.
ContextPtr y_context();
// The 19 variables of the elimination ideal: the seven X coordinates
// followed by y12 .. y1, all under one lex order.
ContextPtr elimination_context();
// Symbols F1, G1, G2, G3, G4 of the freely generated ring.
ContextPtr generator_context();

struct DegreeLabel {
  int a = 0;  // degree in a
  int b = 0;  // degree in b
  int c = 0;  // degree in c
  int total() const { return a + b + c; }
  std::string name() const;  // "C" followed by the three digits
  friend bool operator==(const DegreeLabel&, const DegreeLabel&) = default;
};

struct QuesneInvariant {
  DegreeLabel label;
  // Index-contraction formula the polynomial was expanded from.
  std::string formula;
  Polynomial full;        // over fano_context()
  Polynomial restricted;  // over x_context(), possibly zero
};

// Expands a tensor contraction such as "eps[ijk] a[i] c[jA] b[A]" over
// fano_context(). Tensors: a[i], b[i], c[ij] and the Levi-Civita symbol
// eps[ijk]; every index letter is summed over 1..3.
Polynomial contract(std::string_view formula, const Rational& prefactor = 1);

// The 20 Quesne invariants ordered by total degree as in the catalog.
const std::vector<QuesneInvariant>& build_catalog();
const QuesneInvariant& invariant(std::string_view name);

// Notes about transcription choices made while encoding the formulas.
std::vector<std::string> catalog_notes();

// Sets a1=a2=b1=b2=c13=c23=c31=c32=0 and renames a3, b3, c33 to alpha,
// beta, gamma.
Polynomial restrict_to_x(const Polynomial& full);

// Names of the invariants assigned to y1..y12.
const std::array<std::string, 12>& y_assignment();
// Restricted invariants in y1..y12 order, over x_context().
std::vector<Polynomial> restricted_in_y_order();

struct FreeGenerators {
  Polynomial f1, g1, g2, g3, g4;  // over x_context()
  std::array<Polynomial, 5> as_array() const { return {f1, g1, g2, g3, g4}; }
};
FreeGenerators free_generators();

// Images of y1..y12 in generator_context(), one per row of the expansion
// table.
const std::vector<Polynomial>& generator_expansions();

// Ring homomorphism y_i -> expansion of the i-th restricted invariant.
Polynomial phi(const Polynomial& p);

// J = < P_i - y_i > in elimination_context().
Ideal elimination_input();

// Reduced lex basis of the syzygy ideal, over y_context().
GroebnerBasis syzygy_ideal(const GroebnerOptions& options = {},
                           GroebnerStats* stats = nullptr);

// True iff p(y_i -> P_i) vanishes identically in x_context().
bool is_syzygy(const Polynomial& p);

// Checks each expansion-table identity exactly.
Report verify_table1();
// Checks that the 20 restrictions are the expected closed forms.
Report verify_restrictions();

struct InjectivityOptions {
  std::size_t samples = 500;
  int degree_bound = 3;
  std::uint64_t seed = 42;
};

// Random bidirectional check of phi(p) == 0 <=> p in I.
Report verify_injectivity(const GroebnerBasis& syzygies,
                          const InjectivityOptions& options = {});

// Rank of the 5x7 Jacobian of the free generators at a rational point.
int generator_jacobian_rank(std::span<const Rational> point);

struct IdealComparison {
  std::size_t listed = 0;
  std::size_t exact_matches = 0;  // listed elements found verbatim (normalized)
  std::vector<std::string> listed_not_in_computed;
  std::vector<std::string> computed_not_in_listed;
  bool equal() const {
    return listed_not_in_computed.empty() && computed_not_in_listed.empty();
  }
};

// Mutual normal-form check of two generator sets of ideals in y_context().
IdealComparison compare_with_listed(const GroebnerBasis& computed,
                                    std::span<const Polynomial> listed,
                                    const GroebnerOptions& options = {});

}  // namespace invar::catalog
