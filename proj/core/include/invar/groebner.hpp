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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invar/polynomial.hpp"
#include "invar/report.hpp"

namespace invar {

// Generators of an ideal in one context. An empty generator list is the
// zero ideal; zero generators are dropped on construction.
class Ideal {
 public:
  Ideal(ContextPtr context, std::vector<Polynomial> generators);

  const ContextPtr& context() const { return context_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

 private:
  ContextPtr context_;
  std::vector<Polynomial> generators_;
};

struct GroebnerBasis {
  ContextPtr context;
  std::vector<Polynomial> basis;
  bool reduced = false;

  MonomialOrder order() const { return context->order(); }
  bool is_unit() const;
};

struct GroebnerOptions {
  // Upper bound on S-pairs that are actually reduced.
  std::size_t pair_budget = 1'000'000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_pruned = 0;  // discarded by the product/chain criteria
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(std::size_t budget, std::size_t processed);
  std::size_t budget() const { return budget_; }
  std::size_t processed() const { return processed_; }

 private:
  std::size_t budget_;
  std::size_t processed_;
};

// Remainder of full multivariate division: no term of the result is
// divisible by a leading monomial of `basis`.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
// normal selection strategy, followed by inter-reduction. The result is the
// unique reduced Groebner basis of the ideal for the context's order.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& options = {},
                         GroebnerStats* stats = nullptr);

// Minimalizes and inter-reduces a Groebner basis; elements become monic and
// are sorted by descending leading monomial.
GroebnerBasis reduce_basis(ContextPtr context, std::vector<Polynomial> basis);

// Basis elements supported on `keep`. Throws std::invalid_argument unless the
// basis order eliminates the complementary variables.
std::vector<Polynomial> elimination_ideal(const GroebnerBasis& gb,
                                          std::span<const std::string> keep);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

struct DimensionResult {
  int dimension = -1;
  // A maximum independent variable subset, in declaration order.
  std::vector<std::string> witness;
};

// Combinatorial affine dimension from the leading monomials of a Groebner
// basis; -1 for the unit ideal.
DimensionResult affine_dimension(const GroebnerBasis& gb);

// True iff `vars` meets no leading monomial support entirely.
bool is_independent(const GroebnerBasis& gb, std::span<const std::string> vars);

// Clears denominators of the rational parametrisation of y6..y12 by the
// independent parameters y1..y5 and checks each relation for membership.
// `gb` must live in a context containing y1..y12.
Report verify_parametric_solve(const GroebnerBasis& gb);

// The seven denominator-cleared relations, named "y6".."y12".
std::vector<std::pair<std::string, Polynomial>> parametric_relations(
    const ContextPtr& y_context);

}  // namespace invar
