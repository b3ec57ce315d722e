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

#ifndef SBWA_HARNESS_HPP_
#define SBWA_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sbwa/counting.hpp"
#include "sbwa/properties.hpp"
#include "sbwa/ranked_alphabet.hpp"
#include "sbwa/tree_automaton.hpp"
#include "sbwa/words.hpp"

namespace sbwa {

struct TheoremCheckConfig {
  std::string algebra = "PentagonN5";
  std::vector<std::string> word_alphabet{"x", "y"};
  RankedAlphabet tree_alphabet{{{"alpha", 0}, {"sigma", 2}}};
  std::size_t max_word_length = 4;
  std::size_t max_tree_size = 7;
  std::size_t num_automata = 100;
  std::size_t max_states = 3;
  std::uint64_t seed = 42;
  double zero_bias = 0.5;

  /// InvalidArgument unless all bounds are >= 1 and zero_bias in [0, 1].
  void validate() const;
};

enum class Verdict {
  Consistent,                // no disagreement, as predicted
  PredictedCounterexample,   // disagreement in the predicted direction
  UnexpectedCounterexample,  // prediction violated: an implementation bug
};

std::string verdict_name(Verdict v);

using AnyAutomaton = std::variant<WordAutomaton, TreeAutomaton>;
using AnyInput = std::variant<Word, Tree>;

struct Counterexample {
  std::string reason;
  /// Labels of the algebra elements the witness automaton was built from
  /// (empty for randomly generated automata).
  std::vector<std::string> parameters;
  AnyAutomaton automaton;
  AnyInput input;
  Weight run_value;
  Weight init_value;
};

/// Re-evaluates both semantics on the stored witness and compares with the
/// stored values.
bool revalidate(const Counterexample& ce);

struct SubCheck {
  std::string label;
  bool expected;
  bool observed;
  bool consistent() const { return expected == observed; }
};

struct CheckReport {
  std::string theorem;
  std::string algebra;
  std::uint64_t seed = 0;
  std::string hypothesis;
  bool hypothesis_holds = false;
  Verdict verdict = Verdict::Consistent;
  std::vector<Counterexample> counterexamples;
  std::vector<SubCheck> subchecks;
  std::vector<std::string> notes;
  std::size_t inputs_checked = 0;
  std::size_t automata_checked = 0;

  /// 1 for an unexpected counterexample, 0 otherwise.
  int exit_code() const {
    return verdict == Verdict::UnexpectedCounterexample ? 1 : 0;
  }
};

/// Word support theorem.  Over a strongly zero-sum-free algebra both
/// supports must agree for random automata on all short words.  Otherwise
/// the failing half-condition yields parameters (a, b, c) for the
/// three-state special automaton, whose support disagreement on gamma must
/// point in the predicted direction.
CheckReport check_support_theorem_words(const AlgebraPtr& alg,
                                        const TheoremCheckConfig& config);
CheckReport check_support_theorem_words(const TheoremCheckConfig& config);

/// Tree support theorem with alphabet-sensitive hypothesis: nothing for
/// trivial alphabets, strongly zero-sum-free for monadic ones, and
/// bi-strongly zero-sum-free for branching ones.
CheckReport check_support_theorem_trees(const AlgebraPtr& alg,
                                        const TheoremCheckConfig& config);
CheckReport check_support_theorem_trees(const TheoremCheckConfig& config);

enum class ImageMode { Words, Trees };

/// Distributivity (right for words and monadic alphabets, right and left
/// for branching alphabets) holds iff, for every parameter tuple, the
/// special word automaton / branching example automaton has equal images
/// under both semantics.  Images are computed exactly with image_up_to.
CheckReport check_image_theorem(const AlgebraPtr& alg, ImageMode mode,
                                const TheoremCheckConfig& config = {});

struct CostRow {
  Semantics semantics;
  OpCounts measured;
  OpCounts predicted;
  Weight value;
};

struct CostProfile {
  std::size_t num_states = 0;
  std::size_t input_size = 0;  // word length or number of tree nodes
  std::vector<CostRow> rows;   // Run then Init
};

/// Evaluates both semantics under a CountingAlgebra (run semantics
/// unpruned) next to the closed-form operation counts.
CostProfile cost_profile(const WordAutomaton& a, const Word& w);
CostProfile cost_profile(const TreeAutomaton& a, const Tree& t);

/// Closed forms for words: run mul = |Q|^(n+1) (n+1), run add =
/// |Q|^(n+1) - 1, init mul = n|Q|^2 + |Q|, init add = n|Q|(|Q|-1) + |Q|-1.
OpCounts predicted_word_cost(Semantics s, std::size_t num_states,
                             std::size_t length);
OpCounts predicted_tree_cost(Semantics s, std::size_t num_states,
                             const Tree& t);

}  // namespace sbwa

#endif  // SBWA_HARNESS_HPP_
