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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invar {

// Exact rational in lowest terms with positive denominator. GMP keeps
// mpq_class canonical after every arithmetic operation, but not after
// construction from a numerator/denominator pair, so values entering a
// polynomial pass through canonical().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace invar
