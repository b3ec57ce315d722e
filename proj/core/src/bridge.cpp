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

#include "sbwa/bridge.hpp"

#include "sbwa/error.hpp"

namespace sbwa {

RankedAlphabet string_ranked_alphabet(const std::vector<std::string>& letters,
                                      const std::string& end_marker) {
  std::vector<std::pair<std::string, std::size_t>> symbols{{end_marker, 0}};
  for (const auto& l : letters) {
    if (l == end_marker) {
      throw InvalidArgument("end marker '" + end_marker + "' is also a letter");
    }
    symbols.emplace_back(l, 1);
  }
  return RankedAlphabet(std::move(symbols));
}

Tree word_to_tree(const Word& w, const std::string& end_marker) {
  Tree t = leaf(end_marker);
  for (const auto& a : w) t = node(a, {std::move(t)});
  return t;
}

Word tree_to_word(const Tree& t, const std::string& end_marker) {
  Word reversed;
  const Tree* cur = &t;
  while (!cur->children.empty()) {
    if (cur->children.size() != 1) {
      throw InvalidArgument(to_string(t) + " is not a unary spine");
    }
    reversed.push_back(cur->symbol);
    cur = &cur->children.front();
  }
  if (cur->symbol != end_marker) {
    throw InvalidArgument(to_string(t) + " does not end in '" + end_marker + "'");
  }
  return Word(reversed.rbegin(), reversed.rend());
}

TreeAutomaton wsa_to_wta(const WordAutomaton& a, const std::string& end_marker) {
  TreeAutomaton b(a.algebra(), string_ranked_alphabet(a.alphabet(), end_marker),
                  a.states());
  const std::size_t nq = a.num_states();
  const Algebra& alg = a.alg();
  for (std::size_t q = 0; q < nq; ++q) {
    if (!alg.is_zero(a.initial(q))) b.set_transition(0, {}, q, a.initial(q));
    b.set_root_weight(q, a.final_weight(q));
  }
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    for (std::size_t p = 0; p < nq; ++p) {
      const std::size_t child[1] = {p};
      for (std::size_t q = 0; q < nq; ++q) {
        const Weight& w = a.transition(s, p, q);
        if (!alg.is_zero(w)) b.set_transition(s + 1, child, q, w);
      }
    }
  }
  return b;
}

WordAutomaton string_wta_to_wsa(const TreeAutomaton& b) {
  const RankedAlphabet& sigma = b.alphabet();
  if (!classify_alphabet(sigma).string_ranked) {
    throw InvalidArgument("alphabet " + sigma.to_string() + " is not string ranked");
  }
  std::vector<std::string> letters;
  std::vector<std::size_t> letter_ids;
  std::size_t end_id = 0;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (sigma.rank(s) == 0) {
      end_id = s;
    } else {
      letters.push_back(sigma.symbol(s));
      letter_ids.push_back(s);
    }
  }
  WordAutomaton a(b.algebra(), letters, b.states());
  const std::size_t nq = b.num_states();
  for (std::size_t q = 0; q < nq; ++q) {
    a.set_initial(q, b.transition(end_id, {}, q));
    a.set_final(q, b.root_weight(q));
  }
  for (std::size_t i = 0; i < letter_ids.size(); ++i) {
    for (std::size_t p = 0; p < nq; ++p) {
      const std::size_t child[1] = {p};
      for (std::size_t q = 0; q < nq; ++q) {
        a.set_transition(i, p, q, b.transition(letter_ids[i], child, q));
      }
    }
  }
  return a;
}

}  // namespace sbwa
