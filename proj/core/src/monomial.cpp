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

#include "invar/monomial.hpp"

#include <algorithm>
#include <limits>

namespace invar {

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  if (arity > VarContext::kMaxVars) {
    throw std::invalid_argument("monomial arity exceeds VarContext::kMaxVars");
  }
}

Monomial::Monomial(std::size_t arity, std::span<const int> exponents)
    : Monomial(arity) {
  if (exponents.size() != arity) {
    throw std::invalid_argument("exponent vector length " +
                                std::to_string(exponents.size()) +
                                " does not match arity " + std::to_string(arity));
  }
  for (std::size_t i = 0; i < arity; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, int power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int exponent) {
  if (exponent < 0 || exponent > std::numeric_limits<Exponent>::max()) {
    throw std::out_of_range("exponent out of range: " + std::to_string(exponent));
  }
  degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(exponent);
  exps_[i] = static_cast<Exponent>(exponent);
  if (exponent) {
    support_ |= std::uint64_t{1} << i;
  } else {
    support_ &= ~(std::uint64_t{1} << i);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  for (std::size_t i = 0; i < lhs.arity_; ++i) {
    const unsigned e = unsigned{lhs.exps_[i]} + rhs.exps_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    out.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  out.degree_ = lhs.degree_ + rhs.degree_;
  out.support_ = lhs.support_ | rhs.support_;
  return out;
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  out.support_ = 0;
  for (std::size_t i = 0; i < lhs.arity_; ++i) {
    out.exps_[i] = static_cast<Monomial::Exponent>(lhs.exps_[i] - rhs.exps_[i]);
    if (out.exps_[i]) out.support_ |= std::uint64_t{1} << i;
  }
  out.degree_ = lhs.degree_ - rhs.degree_;
  return out;
}

Monomial lcm(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  out.degree_ = 0;
  for (std::size_t i = 0; i < lhs.arity_; ++i) {
    out.exps_[i] = std::max(lhs.exps_[i], rhs.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  out.support_ = lhs.support_ | rhs.support_;
  return out;
}

bool operator==(const Monomial& lhs, const Monomial& rhs) {
  return lhs.arity_ == rhs.arity_ && lhs.degree_ == rhs.degree_ &&
         lhs.support_ == rhs.support_ && lhs.exps_ == rhs.exps_;
}

}  // namespace invar
