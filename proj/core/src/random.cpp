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

#include "sbwa/random.hpp"

#include "sbwa/error.hpp"

namespace sbwa {

Weight random_weight(const Algebra& alg, std::span<const Weight> carrier, Rng& rng,
                     double zero_bias) {
  if (carrier.empty()) throw InvalidArgument("empty carrier");
  std::bernoulli_distribution zero(zero_bias);
  if (zero(rng)) return alg.zero();
  std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
  return carrier[pick(rng)];
}

namespace {

std::vector<std::string> state_names(std::size_t n) {
  if (n == 0) throw InvalidArgument("automaton needs at least one state");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

}  // namespace

WordAutomaton random_word_automaton(AlgebraPtr alg, std::vector<std::string> alphabet,
                                    std::size_t num_states, Rng& rng, double zero_bias) {
  const auto carrier = alg->elements();
  WordAutomaton a(alg, std::move(alphabet), state_names(num_states));
  auto draw = [&] { return random_weight(*alg, carrier, rng, zero_bias); };
  for (std::size_t q = 0; q < num_states; ++q) a.set_initial(q, draw());
  for (std::size_t q = 0; q < num_states; ++q) a.set_final(q, draw());
  for (std::size_t s = 0; s < a.alphabet().size(); ++s)
    for (std::size_t p = 0; p < num_states; ++p)
      for (std::size_t q = 0; q < num_states; ++q) a.set_transition(s, p, q, draw());
  return a;
}

TreeAutomaton random_tree_automaton(AlgebraPtr alg, RankedAlphabet alphabet,
                                    std::size_t num_states, Rng& rng, double zero_bias) {
  const auto carrier = alg->elements();
  TreeAutomaton a(alg, std::move(alphabet), state_names(num_states));
  auto draw = [&] { return random_weight(*alg, carrier, rng, zero_bias); };
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    const std::size_t k = a.alphabet().rank(s);
    std::vector<std::size_t> word(k, 0);
    while (true) {
      for (std::size_t q = 0; q < num_states; ++q) {
        Weight w = draw();
        if (!alg->is_zero(w)) a.set_transition(s, word, q, std::move(w));
      }
      std::size_t pos = k;
      bool done = k == 0;
      while (!done) {
        --pos;
        if (++word[pos] < num_states) break;
        word[pos] = 0;
        done = pos == 0;
      }
      if (done) break;
    }
  }
  for (std::size_t q = 0; q < num_states; ++q) a.set_root_weight(q, draw());
  return a;
}

TreeRun random_run(const TreeAutomaton& a, const Tree& t, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, a.num_states() - 1);
  TreeRun run(size(t));
  for (auto& q : run) q = pick(rng);
  return run;
}

namespace {

// Uniform integer in [0, bound) by rejection over 64-bit limbs.
Natural uniform_below(const Natural& bound, Rng& rng) {
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    Natural x = 0;
    for (std::size_t have = 0; have < bits; have += 64) x = (x << 64) | Natural(rng());
    x >>= (bits + 63) / 64 * 64 - bits;
    if (x < bound) return x;
  }
}

// Exact counts of trees by size, for uniform sampling without enumeration.
class TreeCounter {
 public:
  TreeCounter(const RankedAlphabet& alphabet, std::size_t max_size)
      : alphabet_(alphabet), count_(max_size + 1, 0) {
    const std::size_t max_rank = alphabet.max_rank();
    tuples_.assign(max_rank + 1, std::vector<Natural>(max_size + 1, 0));
    tuples_[0][0] = 1;
    for (std::size_t n = 1; n <= max_size; ++n) {
      for (std::size_t id = 0; id < alphabet.size(); ++id) {
        count_[n] += tuples_[alphabet.rank(id)][n - 1];
      }
      for (std::size_t r = 1; r <= max_rank; ++r) {
        for (std::size_t j = 1; j <= n; ++j) tuples_[r][n] += count_[j] * tuples_[r - 1][n - j];
      }
    }
  }

  const Natural& count(std::size_t n) const { return count_[n]; }

  Tree sample(std::size_t n, Rng& rng) const {
    Natural x = uniform_below(count_[n], rng);
    for (std::size_t id = 0; id < alphabet_.size(); ++id) {
      const std::size_t r = alphabet_.rank(id);
      const Natural& ways = tuples_[r][n - 1];
      if (x < ways) {
        Tree t = leaf(alphabet_.symbol(id));
        sample_children(r, n - 1, rng, t.children);
        return t;
      }
      x -= ways;
    }
    throw InternalLogicError("tree sampler ran past the total count");
  }

 private:
  void sample_children(std::size_t r, std::size_t m, Rng& rng, std::vector<Tree>& out) const {
    if (r == 0) return;
    Natural x = uniform_below(tuples_[r][m], rng);
    for (std::size_t j = 1; j <= m; ++j) {
      const Natural ways = count_[j] * tuples_[r - 1][m - j];
      if (x < ways) {
        out.push_back(sample(j, rng));
        sample_children(r - 1, m - j, rng, out);
        return;
      }
      x -= ways;
    }
    throw InternalLogicError("tree sampler ran past the tuple count");
  }

  const RankedAlphabet& alphabet_;
  std::vector<Natural> count_;
  std::vector<std::vector<Natural>> tuples_;  // [rank][total size]
};

}  // namespace

Tree random_tree(const RankedAlphabet& alphabet, std::size_t max_size, Rng& rng) {
  const TreeCounter counter(alphabet, max_size);
  Natural total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) total += counter.count(n);
  if (total == 0) throw InvalidArgument("no trees within the size bound");
  Natural x = uniform_below(total, rng);
  for (std::size_t n = 1;; ++n) {
    if (x < counter.count(n)) return counter.sample(n, rng);
    x -= counter.count(n);
  }
}

}  // namespace sbwa
