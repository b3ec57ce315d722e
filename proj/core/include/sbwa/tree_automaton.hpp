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

#ifndef SBWA_TREE_AUTOMATON_HPP_
#define SBWA_TREE_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbwa/algebra.hpp"
#include "sbwa/cut.hpp"
#include "sbwa/ranked_alphabet.hpp"
#include "sbwa/semantics.hpp"
#include "sbwa/tree.hpp"

namespace sbwa {

/// State labelling of a tree, indexed like positions(t) (lexicographic
/// order).
using TreeRun = std::vector<std::size_t>;

struct TransitionEntry {
  std::size_t symbol;
  std::vector<std::size_t> children;
  std::size_t target;
  Weight weight;
};

/// Weighted tree automaton (Q, delta, F).  delta is total; entries that were
/// never set are zero.  Storage is a map from (symbol, child-state word) to
/// a weight vector indexed by the target state.
class TreeAutomaton {
 public:
  TreeAutomaton(AlgebraPtr alg, RankedAlphabet alphabet,
                std::vector<std::string> states);

  const AlgebraPtr& algebra() const { return alg_; }
  const Algebra& alg() const { return *alg_; }
  const RankedAlphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t state_index(std::string_view name) const;

  const Weight& transition(std::size_t symbol,
                           std::span<const std::size_t> children,
                           std::size_t target) const;
  void set_transition(std::size_t symbol, std::span<const std::size_t> children,
                      std::size_t target, Weight w);
  const Weight& root_weight(std::size_t q) const { return root_[q]; }
  void set_root_weight(std::size_t q, Weight w);
  const std::vector<Weight>& root_vector() const { return root_; }

  /// Nonzero transitions ordered by symbol, child word, target.
  std::vector<TransitionEntry> transitions() const;

  TreeAutomaton with_algebra(AlgebraPtr alg) const;
  /// Same automaton over a superset alphabet (new symbols get zero
  /// transitions).  InvalidArgument when a symbol disappears or changes rank.
  TreeAutomaton with_alphabet(RankedAlphabet bigger) const;

  bool structurally_equal(const TreeAutomaton& other) const;

 private:
  std::uint64_t key(std::span<const std::size_t> children) const;

  AlgebraPtr alg_;
  RankedAlphabet alphabet_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, std::size_t> state_ids_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<Weight>>> delta_;
  std::vector<Weight> root_;
  Weight zero_;
};

/// Inductive run weight: (product over children of their run weights) times
/// the transition weight at the root.  Empty products are one.
Weight run_weight(const TreeAutomaton& a, const Tree& t, const TreeRun& run);
/// The same quantity computed as the product of all transition weights in
/// post-order.
Weight run_weight_postorder(const TreeAutomaton& a, const Tree& t,
                            const TreeRun& run);

/// Visits all |Q|^|pos(t)| runs, positions in lexicographic order, the root
/// being the most significant digit.
void for_each_run(const TreeAutomaton& a, const Tree& t,
                  const std::function<void(const TreeRun&)>& visit);
std::vector<TreeRun> enumerate_runs(const TreeAutomaton& a, const Tree& t);

Weight run_semantics(const TreeAutomaton& a, const Tree& t,
                     EvalOptions opts = {});

/// h(t) by structural recursion; h(alpha)_q = delta_0(alpha, q).
std::vector<Weight> state_vector(const TreeAutomaton& a, const Tree& t);
Weight initial_semantics(const TreeAutomaton& a, const Tree& t);

Weight evaluate(const TreeAutomaton& a, const Tree& t, Semantics s,
                EvalOptions opts = {});
bool in_support(const TreeAutomaton& a, const Tree& t, Semantics s);

/// Product, in post-order over the positions of t not strictly below the
/// cut, of h(t|w)_{run(w)} for cut positions and of the transition weight
/// at w otherwise; finally times F_{run(root)}.
Weight cut_partial_product(const TreeAutomaton& a, const Tree& t,
                           const TreeRun& run, const Cut& cut);

/// sigma(alpha, ..., alpha, sigma(alpha, ..., alpha)) with rank(sigma) = k.
Tree example_tree(const std::string& sigma, const std::string& alpha,
                  std::size_t k);

/// Six-state automaton over the given alphabet with states a, (b,1),
/// (b',2), 1, q1, q2.  On example_tree its initial-algebra semantics is
/// a(b + b')c and its run semantics abc + ab'c; every other tree gets zero
/// under both semantics.  InvalidArgument when rank(sigma) < 2 or alpha is
/// not nullary.
TreeAutomaton branching_example_automaton(AlgebraPtr alg, const Weight& a,
                                          const Weight& b, const Weight& b2,
                                          const Weight& c,
                                          const RankedAlphabet& alphabet,
                                          const std::string& sigma,
                                          const std::string& alpha);
/// Convenience overload over {alpha:0, sigma:k}.
TreeAutomaton branching_example_automaton(AlgebraPtr alg, const Weight& a,
                                          const Weight& b, const Weight& b2,
                                          const Weight& c, std::size_t k);

/// Restriction to {alpha} u Sigma^(1).  InvalidArgument unless the alphabet
/// is monadic and not trivial and alpha is nullary.
TreeAutomaton restrict_to_nullary(const TreeAutomaton& a,
                                  const std::string& alpha);

/// Values of both semantics over all trees with at most max_size nodes.
ImagePair image_up_to(const TreeAutomaton& a, std::size_t max_size,
                      EvalOptions opts = {});

}  // namespace sbwa

#endif  // SBWA_TREE_AUTOMATON_HPP_
