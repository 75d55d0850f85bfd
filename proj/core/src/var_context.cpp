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

#include "invar/var_context.hpp"

#include <algorithm>
#include <set>

#include "invar/monomial.hpp"

namespace invar {

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kLex:
      return "lex";
    case MonomialOrder::kGrlex:
      return "grlex";
    case MonomialOrder::kGrevlex:
      return "grevlex";
  }
  return "lex";
}

MonomialOrder parse_order(std::string_view text) {
  if (text == "lex") return MonomialOrder::kLex;
  if (text == "grlex") return MonomialOrder::kGrlex;
  if (text == "grevlex") return MonomialOrder::kGrevlex;
  throw std::invalid_argument("unknown monomial order '" + std::string(text) +
                              "' (expected lex, grlex or grevlex)");
}

std::shared_ptr<const VarContext> VarContext::create(
    std::vector<std::string> names, MonomialOrder order,
    std::vector<std::string> precedence) {
  if (names.size() > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) +
                                " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }
  if (precedence.empty()) precedence = names;
  if (precedence.size() != names.size() ||
      std::set<std::string>(precedence.begin(), precedence.end()) != seen) {
    throw std::invalid_argument(
        "precedence must be a permutation of the variable names");
  }

  auto ctx = std::shared_ptr<VarContext>(new VarContext());
  ctx->names_ = std::move(names);
  ctx->order_ = order;
  ctx->rank_.resize(ctx->names_.size());
  for (const auto& p : precedence) {
    const auto idx = *ctx->find(p);
    ctx->rank_[idx] = ctx->by_rank_.size();
    ctx->by_rank_.push_back(idx);
  }
  return ctx;
}

std::vector<std::string> VarContext::precedence() const {
  std::vector<std::string> out;
  out.reserve(by_rank_.size());
  for (auto idx : by_rank_) out.push_back(names_[idx]);
  return out;
}

std::optional<std::size_t> VarContext::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarContext::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::strong_ordering VarContext::compare(const Monomial& lhs,
                                         const Monomial& rhs) const {
  switch (order_) {
    case MonomialOrder::kGrlex:
      if (lhs.degree() != rhs.degree()) return lhs.degree() <=> rhs.degree();
      [[fallthrough]];
    case MonomialOrder::kLex:
      for (auto idx : by_rank_) {
        if (lhs[idx] != rhs[idx]) return lhs[idx] <=> rhs[idx];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::kGrevlex:
      if (lhs.degree() != rhs.degree()) return lhs.degree() <=> rhs.degree();
      for (auto it = by_rank_.rbegin(); it != by_rank_.rend(); ++it) {
        if (lhs[*it] != rhs[*it]) return rhs[*it] <=> lhs[*it];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool VarContext::same_as(const VarContext& other) const {
  return this == &other || (names_ == other.names_ && order_ == other.order_ &&
                            by_rank_ == other.by_rank_);
}

std::shared_ptr<const VarContext> VarContext::with_order(
    MonomialOrder order, std::vector<std::string> precedence) const {
  return create(names_, order, std::move(precedence));
}

void require_same_context(const ContextPtr& lhs, const ContextPtr& rhs) {
  if (lhs == rhs) return;
  if (!lhs || !rhs || !lhs->same_as(*rhs)) {
    throw ContextMismatch("polynomials belong to different variable contexts");
  }
}

}  // namespace invar
