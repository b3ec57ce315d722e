//  Copyright 2026 The sbwa Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef SBWA_WEIGHT_HPP_
#define SBWA_WEIGHT_HPP_

#include <cstddef>
#include <variant>

#include "sbwa/polynomial.hpp"

namespace sbwa {

/// Natural number extended by one adjoined element.  Which element is
/// adjoined depends on the algebra: infinity for NatPlusMin, the additive
/// zero for NatPlusPlus.
struct ExtNat {
  bool adjoined = false;
  Natural value = 0;

  static ExtNat of(Natural n) { return ExtNat{false, std::move(n)}; }
  static ExtNat extra() { return ExtNat{true, 0}; }

  bool operator==(const ExtNat& other) const {
    return adjoined == other.adjoined && (adjoined || value == other.value);
  }
};

/// Opaque carrier element.  Each algebra produces exactly one alternative:
/// finite algebras use an index into their carrier, the natural-number
/// algebras use ExtNat and the polynomial algebra uses Polynomial.
/// Equality is structural.
using Weight = std::variant<std::size_t, ExtNat, Polynomial>;

}  // namespace sbwa

#endif  // SBWA_WEIGHT_HPP_
