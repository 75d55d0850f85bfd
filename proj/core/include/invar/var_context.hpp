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

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invar {

class Monomial;

enum class MonomialOrder { kLex, kGrlex, kGrevlex };

std::string_view to_string(MonomialOrder order);
MonomialOrder parse_order(std::string_view text);

// Raised whenever two operands live in different variable contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable set of named variables together with a monomial order. The
// precedence sequence lists the variables from most to least significant;
// it defaults to the declaration order.
class VarContext {
 public:
  static constexpr std::size_t kMaxVars = 32;

  static std::shared_ptr<const VarContext> create(
      std::vector<std::string> names, MonomialOrder order = MonomialOrder::kLex,
      std::vector<std::string> precedence = {});

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t index) const { return names_[index]; }
  MonomialOrder order() const { return order_; }

  // Variable names from most to least significant.
  std::vector<std::string> precedence() const;
  // Variable indices from most to least significant.
  const std::vector<std::size_t>& precedence_indices() const { return by_rank_; }
  // Position of variable `index` in the precedence sequence (0 = highest).
  std::size_t rank(std::size_t index) const { return rank_[index]; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  std::strong_ordering compare(const Monomial& lhs, const Monomial& rhs) const;

  // Same names, order and precedence.
  bool same_as(const VarContext& other) const;

  // Copy of this context with another order/precedence.
  std::shared_ptr<const VarContext> with_order(
      MonomialOrder order, std::vector<std::string> precedence = {}) const;

 private:
  VarContext() = default;

  std::vector<std::string> names_;
  MonomialOrder order_ = MonomialOrder::kLex;
  std::vector<std::size_t> by_rank_;
  std::vector<std::size_t> rank_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

// Throws ContextMismatch unless both pointers describe the same context.
void require_same_context(const ContextPtr& lhs, const ContextPtr& rhs);

}  // namespace invar
