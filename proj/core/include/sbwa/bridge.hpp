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

#ifndef SBWA_BRIDGE_HPP_
#define SBWA_BRIDGE_HPP_

#include <string>

#include "sbwa/tree.hpp"
#include "sbwa/tree_automaton.hpp"
#include "sbwa/words.hpp"

namespace sbwa {

// Words a1...an correspond to unary spines an(...a1(e)...) over the string
// ranked alphabet {e:0} u {a:1 | a in the word alphabet}.

/// The string ranked alphabet with end marker e.  InvalidArgument if e is
/// one of the letters.
RankedAlphabet string_ranked_alphabet(const std::vector<std::string>& letters,
                                      const std::string& end_marker);

Tree word_to_tree(const Word& w, const std::string& end_marker);
/// Inverse of word_to_tree; InvalidArgument when t is not a unary spine
/// ending in end_marker.
Word tree_to_word(const Tree& t, const std::string& end_marker);

/// Same states; delta_0(e, q) = I_q, delta_1(p, a, q) = mu(a)_{p,q}, root
/// weights F.  Both semantics commute with word_to_tree.
TreeAutomaton wsa_to_wta(const WordAutomaton& a,
                         const std::string& end_marker = "e");

/// Inverse construction.  InvalidArgument unless the alphabet is string
/// ranked.
WordAutomaton string_wta_to_wsa(const TreeAutomaton& b);

}  // namespace sbwa

#endif  // SBWA_BRIDGE_HPP_
