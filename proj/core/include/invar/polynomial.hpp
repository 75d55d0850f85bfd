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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invar/monomial.hpp"
#include "invar/rational.hpp"
#include "invar/var_context.hpp"

namespace invar {

struct Term {
  Monomial monomial;
  Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly
// descending in the context's monomial order with no zero coefficients, so
// the leading term is always terms().front().
class Polynomial {
 public:
  explicit Polynomial(ContextPtr context);

  static Polynomial constant(ContextPtr context, const Rational& value);
  static Polynomial variable(ContextPtr context, std::string_view name);
  static Polynomial variable(ContextPtr context, std::size_t index);
  static Polynomial term(ContextPtr context, Monomial monomial,
                         const Rational& coeff);
  // Accepts terms in any order, merges duplicates and drops zeros.
  static Polynomial from_terms(ContextPtr context, std::vector<Term> terms);
  // Terms must already be strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(ContextPtr context,
                                      std::vector<Term> terms);

  const ContextPtr& context() const { return context_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Undefined on the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  // Bit i set iff variable i occurs in some term.
  std::uint64_t support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) {
    return rhs *= lhs;
  }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  Polynomial pow(unsigned exponent) const;

  // this -= coeff * monomial * other, in a single merge pass.
  void sub_scaled(const Polynomial& other, const Monomial& monomial,
                  const Rational& coeff);
  Polynomial mul_term(const Monomial& monomial, const Rational& coeff) const;

  // Exact evaluation. `point` is indexed like context()->names().
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  double evaluate(const std::map<std::string, double>& point) const;
  // Evaluation of the polynomial with |coefficients| at |point|; an upper
  // bound on the magnitude of every partial sum.
  double evaluate_abs(std::span<const double> point) const;

  // Replaces every variable by an image polynomial; all images must share
  // `target`. Variables missing from `images` raise std::invalid_argument.
  Polynomial substitute(const std::map<std::string, Polynomial>& images,
                        const ContextPtr& target) const;
  // Same, with images indexed like context()->names().
  Polynomial substitute(std::span<const Polynomial> images,
                        const ContextPtr& target) const;

  // Re-expresses the polynomial in a context holding a superset (or the
  // supporting subset) of its variables, matched by name.
  Polynomial rename_into(const ContextPtr& target) const;

  Polynomial derivative(std::size_t var) const;

  // Scaled so that the leading coefficient is 1.
  Polynomial monic() const;
  // Integer coefficients with gcd 1 and a positive leading coefficient.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  Polynomial(ContextPtr context, std::vector<Term> sorted_terms);

  ContextPtr context_;
  std::vector<Term> terms_;
};

// Parses expressions such as "2*x^2 - y/3 + (x+1)*(y-1)". Identifiers must
// be variables of `context`; division is only allowed by rational constants.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& context);

std::strong_ordering compare_monomials(const Monomial& lhs, const Monomial& rhs,
                                       const VarContext& context);

}  // namespace invar
