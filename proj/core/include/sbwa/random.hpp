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

#ifndef SBWA_RANDOM_HPP_
#define SBWA_RANDOM_HPP_

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sbwa/tree_automaton.hpp"
#include "sbwa/words.hpp"

namespace sbwa {

using Rng = std::mt19937_64;

/// Default probability of drawing zero.  Supports of the two semantics only
/// differ through zero interacting with sums, so zero is over-represented.
inline constexpr double kDefaultZeroBias = 0.5;

/// zero with probability zero_bias, otherwise uniform over the carrier.
Weight random_weight(const Algebra& alg, std::span<const Weight> carrier,
                     Rng& rng, double zero_bias = kDefaultZeroBias);

WordAutomaton random_word_automaton(AlgebraPtr alg,
                                    std::vector<std::string> alphabet,
                                    std::size_t num_states, Rng& rng,
                                    double zero_bias = kDefaultZeroBias);

/// Draws every delta entry and every root weight.
TreeAutomaton random_tree_automaton(AlgebraPtr alg, RankedAlphabet alphabet,
                                    std::size_t num_states, Rng& rng,
                                    double zero_bias = kDefaultZeroBias);

TreeRun random_run(const TreeAutomaton& a, const Tree& t, Rng& rng);

/// Uniform over enumerate_trees(alphabet, max_size).
Tree random_tree(const RankedAlphabet& alphabet, std::size_t max_size, Rng& rng);

}  // namespace sbwa

#endif  // SBWA_RANDOM_HPP_
