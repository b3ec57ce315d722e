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

#ifndef SBWA_SEMANTICS_HPP_
#define SBWA_SEMANTICS_HPP_

#include <string>
#include <string_view>

#include "sbwa/algebra.hpp"

namespace sbwa {

/// Run semantics sums the weights of all runs; initial-algebra semantics
/// evaluates the state-vector homomorphism and multiplies with the final
/// (root) weights.
enum class Semantics { Run, Init };

std::string semantics_name(Semantics s);
Semantics parse_semantics(std::string_view name);

struct EvalOptions {
  /// Skip runs as soon as a zero factor appears.  Changes only the number
  /// of algebra operations, never the value.
  bool prune = false;
};

/// Exact value sets of both semantics over a bounded input set.
struct ImagePair {
  WeightSet run;
  WeightSet init;

  explicit ImagePair(const Algebra& alg) : run(alg), init(alg) {}
  const WeightSet& of(Semantics s) const { return s == Semantics::Run ? run : init; }
  bool agree() const { return run.same_elements(init); }
};

}  // namespace sbwa

#endif  // SBWA_SEMANTICS_HPP_
