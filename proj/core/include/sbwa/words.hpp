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

#ifndef SBWA_WORDS_HPP_
#define SBWA_WORDS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbwa/algebra.hpp"
#include "sbwa/semantics.hpp"

namespace sbwa {

using Word = std::vector<std::string>;
/// State indices q_0 ... q_n for a word of length n.
using WordRun = std::vector<std::size_t>;

/// Weighted automaton (Q, I, mu, F) over a finite alphabet.  Every weight
/// defaults to zero; transition matrices are dense |Q| x |Q|.
class WordAutomaton {
 public:
  WordAutomaton(AlgebraPtr alg, std::vector<std::string> alphabet,
                std::vector<std::string> states);

  const AlgebraPtr& algebra() const { return alg_; }
  const Algebra& alg() const { return *alg_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t num_states() const { return states_.size(); }

  std::size_t state_index(std::string_view name) const;
  std::size_t symbol_index(std::string_view name) const;
  bool has_symbol(std::string_view name) const;

  const Weight& initial(std::size_t q) const { return initial_[q]; }
  const Weight& final_weight(std::size_t q) const { return final_[q]; }
  const Weight& transition(std::size_t symbol, std::size_t from,
                           std::size_t to) const;
  const std::vector<Weight>& initial_vector() const { return initial_; }
  const std::vector<Weight>& final_vector() const { return final_; }

  void set_initial(std::size_t q, Weight w);
  void set_final(std::size_t q, Weight w);
  void set_transition(std::size_t symbol, std::size_t from, std::size_t to,
                      Weight w);

  /// Same automaton evaluated in another algebra over the same carrier
  /// (used to attach a CountingAlgebra).
  WordAutomaton with_algebra(AlgebraPtr alg) const;

  /// Symbol indices of w; throws LookupError on unknown symbols.
  std::vector<std::size_t> encode(const Word& w) const;

  /// Structural equality (names and weights).
  bool structurally_equal(const WordAutomaton& other) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, std::size_t> symbol_ids_;
  std::unordered_map<std::string, std::size_t> state_ids_;
  std::vector<Weight> initial_;
  std::vector<Weight> final_;
  std::vector<std::vector<Weight>> matrices_;  // per symbol, row-major
};

/// I_{q0} * mu(a1)_{q0,q1} * ... * mu(an)_{q(n-1),qn} * F_{qn}.
Weight run_weight(const WordAutomaton& a, const Word& w, const WordRun& run);

/// Sum of run_weight over all |Q|^(n+1) runs in lexicographic order.
Weight run_semantics(const WordAutomaton& a, const Word& w,
                     EvalOptions opts = {});

/// h(w) = (...((I * mu(a1)) * mu(a2)) ...) * mu(an), sums over source
/// states in state order.
std::vector<Weight> state_vector(const WordAutomaton& a, const Word& w);
Weight initial_semantics(const WordAutomaton& a, const Word& w);

Weight evaluate(const WordAutomaton& a, const Word& w, Semantics s,
                EvalOptions opts = {});
bool in_support(const WordAutomaton& a, const Word& w, Semantics s);

/// h(a1...ai)_{qi} * mu(a(i+1))_{qi,q(i+1)} * ... * F_{qn}: the hybrid
/// product that interpolates between run_weight (i = 0) and
/// h(w)_{qn} * F_{qn} (i = n).
Weight mixed_prefix_product(const WordAutomaton& a, const Word& w,
                            const WordRun& run, std::size_t i);

/// All words over the alphabet of length <= max_len, by length then
/// lexicographically by alphabet order.
std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet,
                                  std::size_t max_len);

/// Values of both semantics over all words of length <= max_len.
ImagePair image_up_to(const WordAutomaton& a, std::size_t max_len,
                      EvalOptions opts = {});

/// The three-state automaton with states p, q, r: I = (a, b, 0),
/// mu(gamma)_{p,r} = mu(gamma)_{q,r} = 1 and everything else zero,
/// F = (0, 0, c).  On gamma its run semantics is ac + bc while its
/// initial-algebra semantics is (a + b)c.
WordAutomaton special_automaton(AlgebraPtr alg, const Weight& a,
                                const Weight& b, const Weight& c,
                                const std::string& gamma,
                                std::vector<std::string> alphabet);

/// Parses a word against an alphabet.  Text containing spaces or commas is
/// split on them; otherwise it is tokenized by longest match against the
/// alphabet, so "xyx" and "gamma" both work.  "" and "ε" are the empty
/// word.  Throws ParseError when no tokenization exists.
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);
std::string format_word(const Word& w);

}  // namespace sbwa

#endif  // SBWA_WORDS_HPP_
