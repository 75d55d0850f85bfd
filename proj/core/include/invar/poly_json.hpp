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

#include <nlohmann/json.hpp>

#include "invar/groebner.hpp"
#include "invar/polynomial.hpp"

namespace invar {

// {"vars": [...], "order": "lex", "precedence": [...]}
nlohmann::json context_to_json(const VarContext& context);
ContextPtr context_from_json(const nlohmann::json& j);

// {"vars", "order", "precedence", "terms": [{"coeff": "-3/2", "exps": [...]}]}
// Coefficients are decimal fraction strings; exponents follow "vars".
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);
// Parses into an existing context. Accepts the term object above (its
// "vars", if present, must name the same variables) or an expression string.
Polynomial polynomial_from_json(const nlohmann::json& j, const ContextPtr& context);

// Context fields plus {"reduced": bool, "basis": [polynomials]}.
nlohmann::json to_json(const GroebnerBasis& gb);
GroebnerBasis basis_from_json(const nlohmann::json& j);

// Context fields plus {"generators": [...]} where each generator is a term
// object or an expression string.
Ideal ideal_from_json(const nlohmann::json& j);

}  // namespace invar
