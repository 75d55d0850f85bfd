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

#include "invar/poly_json.hpp"

#include <stdexcept>

namespace invar {

using nlohmann::json;

json context_to_json(const VarContext& context) {
  return {{"vars", context.names()},
          {"order", std::string(to_string(context.order()))},
          {"precedence", context.precedence()}};
}

ContextPtr context_from_json(const json& j) {
  if (!j.contains("vars") || !j["vars"].is_array()) {
    throw std::invalid_argument("JSON object has no \"vars\" array");
  }
  auto names = j["vars"].get<std::vector<std::string>>();
  const auto order = parse_order(j.value("order", std::string("lex")));
  std::vector<std::string> precedence;
  if (j.contains("precedence")) {
    precedence = j["precedence"].get<std::vector<std::string>>();
  }
  return VarContext::create(std::move(names), order, std::move(precedence));
}

namespace {

json terms_to_json(const Polynomial& p) {
  auto terms = json::array();
  const auto n = p.context()->arity();
  for (const auto& t : p.terms()) {
    std::vector<int> exps(n);
    for (std::size_t v = 0; v < n; ++v) exps[v] = t.monomial[v];
    terms.push_back({{"coeff", to_string(t.coeff)}, {"exps", exps}});
  }
  return terms;
}

Rational coeff_from_json(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(Integer(std::to_string(c.get<long long>())));
  throw std::invalid_argument("coefficients must be fraction strings or integers");
}

}  // namespace

json to_json(const Polynomial& p) {
  json j = context_to_json(*p.context());
  j["terms"] = terms_to_json(p);
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  return polynomial_from_json(j, context_from_json(j));
}

Polynomial polynomial_from_json(const json& j, const ContextPtr& context) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), context);
  if (!j.is_object() || !j.contains("terms")) {
    throw std::invalid_argument("polynomial must be an expression string or an "
                                "object with \"terms\"");
  }
  if (j.contains("vars") &&
      j["vars"].get<std::vector<std::string>>() != context->names()) {
    throw ContextMismatch("polynomial \"vars\" differ from the expected context");
  }
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    const auto exps = t.at("exps").get<std::vector<int>>();
    terms.push_back({Monomial(context->arity(), exps), coeff_from_json(t.at("coeff"))});
  }
  return Polynomial::from_terms(context, std::move(terms));
}

json to_json(const GroebnerBasis& gb) {
  json j = context_to_json(*gb.context);
  j["reduced"] = gb.reduced;
  auto basis = json::array();
  for (const auto& g : gb.basis) basis.push_back({{"terms", terms_to_json(g)}});
  j["basis"] = std::move(basis);
  return j;
}

GroebnerBasis basis_from_json(const json& j) {
  GroebnerBasis gb{context_from_json(j), {}, j.value("reduced", false)};
  for (const auto& g : j.at("basis")) gb.basis.push_back(polynomial_from_json(g, gb.context));
  return gb;
}

Ideal ideal_from_json(const json& j) {
  const auto ctx = context_from_json(j);
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw std::invalid_argument("ideal JSON has no \"generators\" array");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : j["generators"]) gens.push_back(polynomial_from_json(g, ctx));
  return Ideal(ctx, std::move(gens));
}

}  // namespace invar
