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

#ifndef SBWA_PROPERTIES_HPP_
#define SBWA_PROPERTIES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbwa/algebra.hpp"

namespace sbwa {

/// Conditions on a strong bimonoid that are decided by exhaustive search.
/// The last four are the one-sided halves of the zero-sum-freeness
/// conditions that characterize the two support inclusions.
enum class Property {
  ZeroSumFree,            // a+b = 0  iff  a = b = 0
  StronglyZSF,            // (a+b)c = 0  iff  ac = bc = 0
  BiStronglyZSF,          // a(b+b')c = 0  iff  abc = ab'c = 0
  ZeroDivisorFree,        // ab = 0  iff  a = 0 or b = 0
  Positive,               // zero-sum-free and zero-divisor-free
  ZeroRightDistributive,  // (a+b)c = 0  iff  ac + bc = 0
  RightDistributive,      // (a+b)c = ac + bc
  LeftDistributive,       // a(b+c) = ab + ac
  Distributive,           // both of the above
  Commutative,            // ab = ba
  RunToInit,              // ac != 0  =>  (a+b)c != 0
  InitToRun,              // (a+b)c != 0  =>  ac != 0 or bc != 0
  TreeRunToInit,          // abc != 0  =>  a(b+b')c != 0
  TreeInitToRun,          // a(b+b')c != 0  =>  abc != 0 or ab'c != 0
};

enum class Half { RunToInit, InitToRun, TreeRunToInit, TreeInitToRun };

std::string property_name(Property p);
Property parse_property(std::string_view name);
/// Number of quantified variables (2, 3 or 4).
std::size_t property_arity(Property p);
Property as_property(Half h);

/// The properties reported by classify, in report order.
std::span<const Property> hierarchy_properties();
std::span<const Property> half_properties();

struct PropertyVerdict {
  Property property;
  bool holds = true;
  /// First violating tuple in carrier-enumeration order; empty iff holds.
  std::vector<Weight> witness;
};

/// Evaluates the defining condition on one tuple (size = arity).
bool satisfies(const Algebra& alg, Property p, std::span<const Weight> tuple);

/// True iff the tuple is a genuine counterexample to p.
inline bool violates(const Algebra& alg, Property p,
                     std::span<const Weight> tuple) {
  return !satisfies(alg, p, tuple);
}

/// Exhaustive decision over all tuples of the carrier, tuples enumerated
/// lexicographically with the first component outermost.  Throws
/// EnumerationError for infinite algebras.
PropertyVerdict check(const Algebra& alg, Property p);
PropertyVerdict check_half(const Algebra& alg, Half h);

struct PropertyReport {
  std::string algebra;
  std::vector<PropertyVerdict> verdicts;  // hierarchy_properties() order
  std::vector<PropertyVerdict> halves;    // half_properties() order

  const PropertyVerdict& get(Property p) const;
  bool holds(Property p) const { return get(p).holds; }
};

/// All verdicts plus internal consistency checks of the implication chain
/// positive => bi-strongly => strongly => zero-sum-free, of
/// strongly = zsf and zero-right-distributive, of
/// right-distributive => zero-right-distributive, and of
/// commutative and strongly => bi-strongly.  A failed consistency check
/// throws InternalLogicError.
PropertyReport classify(const Algebra& alg);

}  // namespace sbwa

#endif  // SBWA_PROPERTIES_HPP_
