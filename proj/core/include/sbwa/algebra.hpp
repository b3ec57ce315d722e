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

#ifndef SBWA_ALGEBRA_HPP_
#define SBWA_ALGEBRA_HPP_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbwa/weight.hpp"

namespace sbwa {

/// A strong bimonoid (B, add, mul, zero, one): (B, add, zero) is a
/// commutative monoid, (B, mul, one) is a monoid and zero annihilates
/// under mul.  Distributivity is not assumed anywhere.
///
/// Implementations are immutable and may be shared between threads, with
/// the exception of CountingAlgebra.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::string name() const = 0;
  virtual Weight zero() const = 0;
  virtual Weight one() const = 0;
  virtual Weight add(const Weight& a, const Weight& b) const = 0;
  virtual Weight mul(const Weight& a, const Weight& b) const = 0;
  virtual bool equal(const Weight& a, const Weight& b) const { return a == b; }

  /// Human-readable label; parse(describe(w)) == w.
  virtual std::string describe(const Weight& w) const = 0;
  /// Throws LookupError or ParseError for labels that name no element.
  virtual Weight parse(std::string_view label) const = 0;

  virtual bool is_finite() const { return false; }
  /// Every carrier element exactly once, in a fixed order.  Throws
  /// EnumerationError for infinite carriers.
  virtual std::vector<Weight> elements() const;

  bool is_zero(const Weight& w) const { return equal(w, zero()); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Left fold with add; the empty sum is zero.
Weight sum(const Algebra& alg, std::span<const Weight> terms);
/// Left fold with mul; the empty product is one.
Weight product(const Algebra& alg, std::span<const Weight> factors);

/// Set of weights, deduplicated with Algebra::equal, in insertion order.
class WeightSet {
 public:
  explicit WeightSet(const Algebra& alg) : alg_(&alg) {}

  bool insert(const Weight& w);
  bool contains(const Weight& w) const;
  std::size_t size() const { return items_.size(); }
  const std::vector<Weight>& items() const { return items_; }
  /// Same elements regardless of insertion order.
  bool same_elements(const WeightSet& other) const;

 private:
  const Algebra* alg_;
  std::vector<Weight> items_;
};

std::vector<std::string> describe_all(const Algebra& alg,
                                      std::span<const Weight> ws);

}  // namespace sbwa

#endif  // SBWA_ALGEBRA_HPP_
