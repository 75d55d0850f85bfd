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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "invar/var_context.hpp"

namespace invar {

// Exponent vector indexed like the owning context's variable names. Stored
// inline so that monomials are cheap to copy inside the Groebner kernel.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::size_t arity, std::span<const int> exponents);

  static Monomial variable(std::size_t arity, std::size_t index, int power = 1);

  std::size_t arity() const { return arity_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  // Bit i set iff variable i occurs.
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int exponent);

  bool divides(const Monomial& other) const;
  // True iff no variable occurs in both.
  bool coprime(const Monomial& other) const {
    return (support_ & other.support_) == 0;
  }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  // Requires rhs | lhs.
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);
  friend Monomial lcm(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs);

 private:
  std::array<Exponent, VarContext::kMaxVars> exps_{};
  std::uint8_t arity_ = 0;
  std::uint32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

}  // namespace invar
