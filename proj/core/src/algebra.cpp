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

#include "sbwa/algebra.hpp"

#include <algorithm>

#include "sbwa/error.hpp"

namespace sbwa {

std::vector<Weight> Algebra::elements() const {
  throw EnumerationError("algebra " + name() +
                         " has an infinite carrier and cannot be enumerated");
}

Weight sum(const Algebra& alg, std::span<const Weight> terms) {
  if (terms.empty()) return alg.zero();
  Weight acc = terms.front();
  for (const auto& t : terms.subspan(1)) acc = alg.add(acc, t);
  return acc;
}

Weight product(const Algebra& alg, std::span<const Weight> factors) {
  if (factors.empty()) return alg.one();
  Weight acc = factors.front();
  for (const auto& f : factors.subspan(1)) acc = alg.mul(acc, f);
  return acc;
}

bool WeightSet::insert(const Weight& w) {
  if (contains(w)) return false;
  items_.push_back(w);
  return true;
}

bool WeightSet::contains(const Weight& w) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Weight& x) { return alg_->equal(x, w); });
}

bool WeightSet::same_elements(const WeightSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(items_.begin(), items_.end(),
                     [&](const Weight& x) { return other.contains(x); });
}

std::vector<std::string> describe_all(const Algebra& alg,
                                      std::span<const Weight> ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(alg.describe(w));
  return out;
}

}  // namespace sbwa
