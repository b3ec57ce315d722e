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

#include "sbwa/tree_automaton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "sbwa/error.hpp"

namespace sbwa {

TreeAutomaton::TreeAutomaton(AlgebraPtr alg, RankedAlphabet alphabet,
                             std::vector<std::string> states)
    : alg_(std::move(alg)), alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (!alg_) throw InvalidArgument("automaton needs an algebra");
  if (states_.empty()) throw InvalidArgument("automaton needs at least one state");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].empty()) throw InvalidArgument("empty state name");
    if (!state_ids_.emplace(states_[i], i).second) {
      throw InvalidArgument("duplicate state '" + states_[i] + "'");
    }
  }
  // Child-state words must fit the 64-bit key.
  const std::size_t nq = states_.size();
  std::uint64_t capacity = 1;
  for (std::size_t r = 0; r < alphabet_.max_rank(); ++r) {
    if (capacity > std::numeric_limits<std::uint64_t>::max() / nq) {
      throw InvalidArgument("too many states for the maximal rank");
    }
    capacity *= nq;
  }
  zero_ = alg_->zero();
  delta_.resize(alphabet_.size());
  root_.assign(nq, zero_);
}

std::size_t TreeAutomaton::state_index(std::string_view name) const {
  auto it = state_ids_.find(std::string(name));
  if (it == state_ids_.end()) throw LookupError("unknown state '" + std::string(name) + "'");
  return it->second;
}

std::uint64_t TreeAutomaton::key(std::span<const std::size_t> children) const {
  std::uint64_t k = 0;
  for (std::size_t c : children) {
    if (c >= states_.size()) throw InvalidArgument("state index out of range");
    k = k * states_.size() + c;
  }
  return k;
}

const Weight& TreeAutomaton::transition(std::size_t symbol,
                                        std::span<const std::size_t> children,
                                        std::size_t target) const {
  if (symbol >= alphabet_.size()) throw InvalidArgument("symbol index out of range");
  if (children.size() != alphabet_.rank(symbol)) {
    throw InvalidArgument("symbol '" + alphabet_.symbol(symbol) + "' has rank " +
                          std::to_string(alphabet_.rank(symbol)));
  }
  const auto& table = delta_[symbol];
  auto it = table.find(key(children));
  if (it == table.end()) return zero_;
  return it->second.at(target);
}

void TreeAutomaton::set_transition(std::size_t symbol,
                                   std::span<const std::size_t> children,
                                   std::size_t target, Weight w) {
  if (symbol >= alphabet_.size()) throw InvalidArgument("symbol index out of range");
  if (children.size() != alphabet_.rank(symbol)) {
    throw InvalidArgument("symbol '" + alphabet_.symbol(symbol) + "' has rank " +
                          std::to_string(alphabet_.rank(symbol)));
  }
  if (target >= states_.size()) throw InvalidArgument("state index out of range");
  auto& row = delta_[symbol][key(children)];
  if (row.empty()) row.assign(states_.size(), zero_);
  row[target] = std::move(w);
}

void TreeAutomaton::set_root_weight(std::size_t q, Weight w) { root_.at(q) = std::move(w); }

std::vector<TransitionEntry> TreeAutomaton::transitions() const {
  std::vector<TransitionEntry> out;
  const std::size_t nq = states_.size();
  for (std::size_t s = 0; s < alphabet_.size(); ++s) {
    std::map<std::uint64_t, const std::vector<Weight>*> sorted;
    for (const auto& [k, row] : delta_[s]) sorted.emplace(k, &row);
    const std::size_t rank = alphabet_.rank(s);
    for (const auto& [k, row] : sorted) {
      std::vector<std::size_t> children(rank);
      std::uint64_t rest = k;
      for (std::size_t i = rank; i-- > 0;) {
        children[i] = static_cast<std::size_t>(rest % nq);
        rest /= nq;
      }
      for (std::size_t q = 0; q < nq; ++q) {
        if (!alg_->is_zero((*row)[q])) out.push_back({s, children, q, (*row)[q]});
      }
    }
  }
  return out;
}

TreeAutomaton TreeAutomaton::with_algebra(AlgebraPtr alg) const {
  TreeAutomaton copy = *this;
  copy.alg_ = std::move(alg);
  return copy;
}

TreeAutomaton TreeAutomaton::with_alphabet(RankedAlphabet bigger) const {
  TreeAutomaton out(alg_, std::move(bigger), states_);
  for (std::size_t s = 0; s < alphabet_.size(); ++s) {
    const auto& name = alphabet_.symbol(s);
    auto id = out.alphabet_.find(name);
    if (!id || out.alphabet_.rank(*id) != alphabet_.rank(s)) {
      throw InvalidArgument("symbol '" + name + "' is missing or has another rank");
    }
    out.delta_[*id] = delta_[s];
  }
  out.root_ = root_;
  return out;
}

bool TreeAutomaton::structurally_equal(const TreeAutomaton& other) const {
  if (!(alphabet_ == other.alphabet_) || states_ != other.states_ || root_ != other.root_) {
    return false;
  }
  const auto mine = transitions();
  const auto theirs = other.transitions();
  if (mine.size() != theirs.size()) return false;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    const auto& x = mine[i];
    const auto& y = theirs[i];
    if (x.symbol != y.symbol || x.children != y.children || x.target != y.target ||
        !(x.weight == y.weight)) {
      return false;
    }
  }
  return true;
}

namespace {

// Flattened tree in preorder: symbol ids, child indices and the last
// preorder index of every subtree.
struct Flat {
  std::vector<std::size_t> symbol;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> last;
  std::vector<std::size_t> post;  // preorder indices in post-order
};

std::size_t flatten_into(const TreeAutomaton& a, const Tree& t, Flat& f) {
  const std::size_t me = f.symbol.size();
  const auto id = a.alphabet().find(t.symbol);
  if (!id) throw LookupError("unknown symbol '" + t.symbol + "'");
  if (a.alphabet().rank(*id) != t.children.size()) {
    throw InvalidArgument("symbol '" + t.symbol + "' has rank " +
                          std::to_string(a.alphabet().rank(*id)) + " but " +
                          std::to_string(t.children.size()) + " children");
  }
  f.symbol.push_back(*id);
  f.children.emplace_back();
  f.last.push_back(me);
  for (const auto& c : t.children) {
    const std::size_t ci = flatten_into(a, c, f);
    f.children[me].push_back(ci);
  }
  f.last[me] = f.symbol.size() - 1;
  f.post.push_back(me);
  return me;
}

Flat flatten(const TreeAutomaton& a, const Tree& t) {
  Flat f;
  flatten_into(a, t, f);
  return f;
}

void check_run(const TreeAutomaton& a, const Flat& f, const TreeRun& run) {
  if (run.size() != f.symbol.size()) {
    throw InvalidArgument("run labels " + std::to_string(run.size()) +
                          " positions, tree has " + std::to_string(f.symbol.size()));
  }
  for (auto q : run) {
    if (q >= a.num_states()) throw InvalidArgument("run state out of range");
  }
}

const Weight& delta_at(const TreeAutomaton& a, const Flat& f, const TreeRun& run,
                       std::size_t v, std::vector<std::size_t>& scratch) {
  scratch.clear();
  for (auto c : f.children[v]) scratch.push_back(run[c]);
  return a.transition(f.symbol[v], scratch, run[v]);
}

Weight inductive(const TreeAutomaton& a, const Flat& f, const TreeRun& run,
                 std::size_t v) {
  const Algebra& alg = a.alg();
  std::vector<Weight> factors;
  for (auto c : f.children[v]) factors.push_back(inductive(a, f, run, c));
  std::vector<std::size_t> scratch;
  return alg.mul(product(alg, factors), delta_at(a, f, run, v, scratch));
}

}  // namespace

Weight run_weight(const TreeAutomaton& a, const Tree& t, const TreeRun& run) {
  const Flat f = flatten(a, t);
  check_run(a, f, run);
  return inductive(a, f, run, 0);
}

Weight run_weight_postorder(const TreeAutomaton& a, const Tree& t, const TreeRun& run) {
  const auto pre = positions(t);
  if (run.size() != pre.size()) {
    throw InvalidArgument("run labels " + std::to_string(run.size()) +
                          " positions, tree has " + std::to_string(pre.size()));
  }
  std::map<Position, std::size_t> index;
  for (std::size_t i = 0; i < pre.size(); ++i) index.emplace(pre[i], i);
  const Algebra& alg = a.alg();
  Weight acc = alg.one();
  for (const auto& w : postorder(t)) {
    const Tree& sub = subtree_at(t, w);
    std::vector<std::size_t> child_states;
    for (std::size_t i = 1; i <= sub.children.size(); ++i) {
      Position c = w;
      c.push_back(i);
      child_states.push_back(run.at(index.at(c)));
    }
    const std::size_t q = run.at(index.at(w));
    if (q >= a.num_states()) throw InvalidArgument("run state out of range");
    acc = alg.mul(acc, a.transition(a.alphabet().id(sub.symbol), child_states, q));
  }
  return acc;
}

void for_each_run(const TreeAutomaton& a, const Tree& t,
                  const std::function<void(const TreeRun&)>& visit) {
  const std::size_t n = size(t);
  const std::size_t nq = a.num_states();
  TreeRun run(n, 0);
  while (true) {
    visit(run);
    std::size_t pos = n;
    while (true) {
      --pos;
      if (++run[pos] < nq) break;
      run[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<TreeRun> enumerate_runs(const TreeAutomaton& a, const Tree& t) {
  std::vector<TreeRun> out;
  for_each_run(a, t, [&](const TreeRun& r) { out.push_back(r); });
  return out;
}

Weight run_semantics(const TreeAutomaton& a, const Tree& t, EvalOptions opts) {
  const Flat f = flatten(a, t);
  const Algebra& alg = a.alg();
  const std::size_t n = f.symbol.size();
  const std::size_t nq = a.num_states();
  std::optional<Weight> total;
  std::vector<std::size_t> scratch;

  // Post-order product of the transition weights, then the root weight.
  auto weight_of = [&](const TreeRun& run) {
    Weight acc = delta_at(a, f, run, f.post[0], scratch);
    for (std::size_t i = 1; i < n; ++i) {
      acc = alg.mul(acc, delta_at(a, f, run, f.post[i], scratch));
    }
    return alg.mul(acc, a.root_weight(run[0]));
  };
  auto accumulate = [&](const Weight& v) { total = total ? alg.add(*total, v) : v; };

  if (!opts.prune) {
    TreeRun run(n, 0);
    while (true) {
      accumulate(weight_of(run));
      std::size_t pos = n;
      while (true) {
        --pos;
        if (++run[pos] < nq) break;
        run[pos] = 0;
        if (pos == 0) return total ? *total : alg.zero();
      }
    }
  }

  // Positions are assigned in preorder; a node's transition is known once
  // the last position of its subtree has a state.
  std::vector<std::vector<std::size_t>> completes(n);
  for (std::size_t v = 0; v < n; ++v) completes[f.last[v]].push_back(v);
  TreeRun run(n, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      Weight v = weight_of(run);
      if (!alg.is_zero(v)) accumulate(v);
      return;
    }
    for (std::size_t q = 0; q < nq; ++q) {
      run[i] = q;
      if (i == 0 && alg.is_zero(a.root_weight(q))) continue;
      bool dead = false;
      for (auto v : completes[i]) {
        if (alg.is_zero(delta_at(a, f, run, v, scratch))) {
          dead = true;
          break;
        }
      }
      if (!dead) assign(i + 1);
    }
  };
  assign(0);
  return total ? *total : alg.zero();
}

namespace {

std::vector<Weight> h_vector(const TreeAutomaton& a, const Tree& t) {
  const Algebra& alg = a.alg();
  const std::size_t nq = a.num_states();
  const auto id = a.alphabet().find(t.symbol);
  if (!id) throw LookupError("unknown symbol '" + t.symbol + "'");
  const std::size_t k = t.children.size();
  if (a.alphabet().rank(*id) != k) {
    throw InvalidArgument("symbol '" + t.symbol + "' has rank " +
                          std::to_string(a.alphabet().rank(*id)) + " but " +
                          std::to_string(k) + " children");
  }
  std::vector<Weight> h;
  h.reserve(nq);
  if (k == 0) {
    for (std::size_t q = 0; q < nq; ++q) h.push_back(a.transition(*id, {}, q));
    return h;
  }
  std::vector<std::vector<Weight>> child;
  for (const auto& c : t.children) child.push_back(h_vector(a, c));

  for (std::size_t q = 0; q < nq; ++q) {
    std::optional<Weight> acc;
    std::vector<std::size_t> word(k, 0);
    while (true) {
      Weight term = child[0][word[0]];
      for (std::size_t i = 1; i < k; ++i) term = alg.mul(term, child[i][word[i]]);
      term = alg.mul(term, a.transition(*id, word, q));
      acc = acc ? alg.add(*acc, term) : term;
      std::size_t pos = k;
      bool done = false;
      while (true) {
        --pos;
        if (++word[pos] < nq) break;
        word[pos] = 0;
        if (pos == 0) {
          done = true;
          break;
        }
      }
      if (done) break;
    }
    h.push_back(std::move(*acc));
  }
  return h;
}

}  // namespace

std::vector<Weight> state_vector(const TreeAutomaton& a, const Tree& t) {
  return h_vector(a, t);
}

Weight initial_semantics(const TreeAutomaton& a, const Tree& t) {
  const auto h = h_vector(a, t);
  const Algebra& alg = a.alg();
  Weight acc = alg.mul(h[0], a.root_weight(0));
  for (std::size_t q = 1; q < a.num_states(); ++q) {
    acc = alg.add(acc, alg.mul(h[q], a.root_weight(q)));
  }
  return acc;
}

Weight evaluate(const TreeAutomaton& a, const Tree& t, Semantics s, EvalOptions opts) {
  return s == Semantics::Run ? run_semantics(a, t, opts) : initial_semantics(a, t);
}

bool in_support(const TreeAutomaton& a, const Tree& t, Semantics s) {
  return !a.alg().is_zero(evaluate(a, t, s, {}));
}

Weight cut_partial_product(const TreeAutomaton& a, const Tree& t, const TreeRun& run,
                           const Cut& cut) {
  if (!is_valid_cut(t, cut)) throw InvalidArgument(format_cut(cut) + " is not a cut");
  const auto pre = positions(t);
  if (run.size() != pre.size()) {
    throw InvalidArgument("run labels " + std::to_string(run.size()) +
                          " positions, tree has " + std::to_string(pre.size()));
  }
  std::map<Position, std::size_t> index;
  for (std::size_t i = 0; i < pre.size(); ++i) index.emplace(pre[i], i);
  for (auto q : run) {
    if (q >= a.num_states()) throw InvalidArgument("run state out of range");
  }

  auto strictly_below_cut = [&](const Position& w) {
    for (const auto& c : cut) {
      if (c.size() < w.size() && is_prefix(c, w)) return true;
    }
    return false;
  };
  auto on_cut = [&](const Position& w) {
    return std::find(cut.begin(), cut.end(), w) != cut.end();
  };

  const Algebra& alg = a.alg();
  std::map<Position, std::vector<Weight>> h_memo;
  Weight acc = alg.one();
  bool first = true;
  for (const auto& w : postorder(t)) {
    if (strictly_below_cut(w)) continue;
    const Tree& sub = subtree_at(t, w);
    const std::size_t q = run[index.at(w)];
    Weight b;
    if (on_cut(w)) {
      auto it = h_memo.find(w);
      if (it == h_memo.end()) it = h_memo.emplace(w, h_vector(a, sub)).first;
      b = it->second[q];
    } else {
      std::vector<std::size_t> child_states;
      for (std::size_t i = 1; i <= sub.children.size(); ++i) {
        Position c = w;
        c.push_back(i);
        child_states.push_back(run[index.at(c)]);
      }
      b = a.transition(a.alphabet().id(sub.symbol), child_states, q);
    }
    acc = first ? b : alg.mul(acc, b);
    first = false;
  }
  return alg.mul(acc, a.root_weight(run[0]));
}

Tree example_tree(const std::string& sigma, const std::string& alpha, std::size_t k) {
  if (k < 2) throw InvalidArgument("example tree needs rank >= 2");
  std::vector<Tree> inner(k, leaf(alpha));
  std::vector<Tree> outer(k - 1, leaf(alpha));
  outer.push_back(node(sigma, std::move(inner)));
  return node(sigma, std::move(outer));
}

TreeAutomaton branching_example_automaton(AlgebraPtr alg, const Weight& a,
                                          const Weight& b, const Weight& b2,
                                          const Weight& c,
                                          const RankedAlphabet& alphabet,
                                          const std::string& sigma,
                                          const std::string& alpha) {
  const auto sid = alphabet.find(sigma);
  const auto aid = alphabet.find(alpha);
  if (!sid || !aid) throw InvalidArgument("symbols must belong to the alphabet");
  const std::size_t k = alphabet.rank(*sid);
  if (k < 2) throw InvalidArgument("'" + sigma + "' must have rank >= 2");
  if (alphabet.rank(*aid) != 0) throw InvalidArgument("'" + alpha + "' must be nullary");

  const Weight one = alg->one();
  // States: a, (b,1), (b',2), 1, q1, q2.
  enum : std::size_t { A = 0, B1 = 1, B2 = 2, ONE = 3, Q1 = 4, Q2 = 5 };
  TreeAutomaton m(std::move(alg), alphabet, {"a", "(b,1)", "(b',2)", "1", "q1", "q2"});
  m.set_transition(*aid, {}, A, a);
  m.set_transition(*aid, {}, B1, b);
  m.set_transition(*aid, {}, B2, b2);
  m.set_transition(*aid, {}, ONE, one);

  std::vector<std::size_t> word(k, ONE);
  word[0] = B1;
  m.set_transition(*sid, word, Q1, one);
  word[0] = B2;
  m.set_transition(*sid, word, Q1, one);
  word[0] = A;
  word[k - 1] = Q1;
  m.set_transition(*sid, word, Q2, one);
  m.set_root_weight(Q2, c);
  return m;
}

TreeAutomaton branching_example_automaton(AlgebraPtr alg, const Weight& a,
                                          const Weight& b, const Weight& b2,
                                          const Weight& c, std::size_t k) {
  RankedAlphabet alphabet({{"alpha", 0}, {"sigma", k}});
  return branching_example_automaton(std::move(alg), a, b, b2, c, alphabet, "sigma",
                                     "alpha");
}

TreeAutomaton restrict_to_nullary(const TreeAutomaton& a, const std::string& alpha) {
  const auto cls = classify_alphabet(a.alphabet());
  if (!cls.monadic || cls.trivial) {
    throw InvalidArgument("restriction needs a monadic, non-trivial alphabet");
  }
  const auto aid = a.alphabet().find(alpha);
  if (!aid || a.alphabet().rank(*aid) != 0) {
    throw InvalidArgument("'" + alpha + "' is not a nullary symbol of the alphabet");
  }
  std::vector<std::pair<std::string, std::size_t>> kept;
  std::vector<std::size_t> old_ids;
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    if (s == *aid || a.alphabet().rank(s) == 1) {
      kept.push_back(a.alphabet().symbols()[s]);
      old_ids.push_back(s);
    }
  }
  TreeAutomaton out(a.algebra(), RankedAlphabet(std::move(kept)), a.states());
  for (const auto& e : a.transitions()) {
    auto it = std::find(old_ids.begin(), old_ids.end(), e.symbol);
    if (it == old_ids.end()) continue;
    out.set_transition(static_cast<std::size_t>(it - old_ids.begin()), e.children,
                       e.target, e.weight);
  }
  for (std::size_t q = 0; q < a.num_states(); ++q) out.set_root_weight(q, a.root_weight(q));
  return out;
}

ImagePair image_up_to(const TreeAutomaton& a, std::size_t max_size, EvalOptions opts) {
  if (max_size < 1) throw InvalidArgument("tree size bound must be >= 1");
  ImagePair image(a.alg());
  for (const auto& t : enumerate_trees(a.alphabet(), max_size)) {
    image.run.insert(run_semantics(a, t, opts));
    image.init.insert(initial_semantics(a, t));
  }
  return image;
}

}  // namespace sbwa
