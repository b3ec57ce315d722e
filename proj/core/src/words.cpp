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

#include "sbwa/words.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "sbwa/error.hpp"

namespace sbwa {

namespace {

std::unordered_map<std::string, std::size_t> index_names(
    const std::vector<std::string>& names, const char* what) {
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidArgument(std::string("empty ") + what + " name");
    if (!ids.emplace(names[i], i).second) {
      throw InvalidArgument(std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
  return ids;
}

}  // namespace

WordAutomaton::WordAutomaton(AlgebraPtr alg, std::vector<std::string> alphabet,
                             std::vector<std::string> states)
    : alg_(std::move(alg)), alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (!alg_) throw InvalidArgument("automaton needs an algebra");
  if (states_.empty()) throw InvalidArgument("automaton needs at least one state");
  symbol_ids_ = index_names(alphabet_, "symbol");
  state_ids_ = index_names(states_, "state");
  const Weight zero = alg_->zero();
  initial_.assign(states_.size(), zero);
  final_.assign(states_.size(), zero);
  matrices_.assign(alphabet_.size(),
                   std::vector<Weight>(states_.size() * states_.size(), zero));
}

std::size_t WordAutomaton::state_index(std::string_view name) const {
  auto it = state_ids_.find(std::string(name));
  if (it == state_ids_.end()) throw LookupError("unknown state '" + std::string(name) + "'");
  return it->second;
}

std::size_t WordAutomaton::symbol_index(std::string_view name) const {
  auto it = symbol_ids_.find(std::string(name));
  if (it == symbol_ids_.end()) throw LookupError("unknown symbol '" + std::string(name) + "'");
  return it->second;
}

bool WordAutomaton::has_symbol(std::string_view name) const {
  return symbol_ids_.count(std::string(name)) != 0;
}

const Weight& WordAutomaton::transition(std::size_t symbol, std::size_t from,
                                        std::size_t to) const {
  return matrices_.at(symbol).at(from * states_.size() + to);
}

void WordAutomaton::set_initial(std::size_t q, Weight w) { initial_.at(q) = std::move(w); }
void WordAutomaton::set_final(std::size_t q, Weight w) { final_.at(q) = std::move(w); }

void WordAutomaton::set_transition(std::size_t symbol, std::size_t from,
                                   std::size_t to, Weight w) {
  if (from >= states_.size() || to >= states_.size()) {
    throw InvalidArgument("state index out of range");
  }
  matrices_.at(symbol)[from * states_.size() + to] = std::move(w);
}

WordAutomaton WordAutomaton::with_algebra(AlgebraPtr alg) const {
  WordAutomaton copy = *this;
  copy.alg_ = std::move(alg);
  return copy;
}

std::vector<std::size_t> WordAutomaton::encode(const Word& w) const {
  std::vector<std::size_t> ids;
  ids.reserve(w.size());
  for (const auto& s : w) ids.push_back(symbol_index(s));
  return ids;
}

bool WordAutomaton::structurally_equal(const WordAutomaton& other) const {
  return alphabet_ == other.alphabet_ && states_ == other.states_ &&
         initial_ == other.initial_ && final_ == other.final_ &&
         matrices_ == other.matrices_;
}

Weight run_weight(const WordAutomaton& a, const Word& w, const WordRun& run) {
  if (run.size() != w.size() + 1) {
    throw InvalidArgument("run has " + std::to_string(run.size()) +
                          " states, expected " + std::to_string(w.size() + 1));
  }
  for (auto q : run) {
    if (q >= a.num_states()) throw InvalidArgument("run state out of range");
  }
  const auto ids = a.encode(w);
  const Algebra& alg = a.alg();
  Weight acc = a.initial(run[0]);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    acc = alg.mul(acc, a.transition(ids[i], run[i], run[i + 1]));
  }
  return alg.mul(acc, a.final_weight(run.back()));
}

Weight run_semantics(const WordAutomaton& a, const Word& w, EvalOptions opts) {
  const auto ids = a.encode(w);
  const Algebra& alg = a.alg();
  const std::size_t nq = a.num_states();
  const std::size_t n = ids.size();
  std::optional<Weight> total;
  auto accumulate = [&](const Weight& v) {
    total = total ? alg.add(*total, v) : v;
  };

  if (!opts.prune) {
    WordRun run(n + 1, 0);
    while (true) {
      Weight acc = a.initial(run[0]);
      for (std::size_t i = 0; i < n; ++i) {
        acc = alg.mul(acc, a.transition(ids[i], run[i], run[i + 1]));
      }
      accumulate(alg.mul(acc, a.final_weight(run[n])));
      std::size_t pos = n + 1;
      while (pos > 0) {
        --pos;
        if (++run[pos] < nq) break;
        run[pos] = 0;
        if (pos == 0) return total ? *total : alg.zero();
      }
    }
  }

  // Depth-first over run prefixes in the same lexicographic order; a zero
  // prefix product annihilates every extension.
  std::function<void(std::size_t, std::size_t, const Weight&)> extend =
      [&](std::size_t i, std::size_t q, const Weight& prefix) {
        if (i == n) {
          if (alg.is_zero(a.final_weight(q))) return;
          Weight v = alg.mul(prefix, a.final_weight(q));
          if (!alg.is_zero(v)) accumulate(v);
          return;
        }
        for (std::size_t r = 0; r < nq; ++r) {
          const Weight& t = a.transition(ids[i], q, r);
          if (alg.is_zero(t)) continue;
          Weight next = alg.mul(prefix, t);
          if (alg.is_zero(next)) continue;
          extend(i + 1, r, next);
        }
      };
  for (std::size_t q = 0; q < nq; ++q) {
    if (!alg.is_zero(a.initial(q))) extend(0, q, a.initial(q));
  }
  return total ? *total : alg.zero();
}

namespace {

std::vector<Weight> step(const WordAutomaton& a, const std::vector<Weight>& h,
                         std::size_t symbol) {
  const Algebra& alg = a.alg();
  const std::size_t nq = a.num_states();
  std::vector<Weight> next;
  next.reserve(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    Weight acc = alg.mul(h[0], a.transition(symbol, 0, q));
    for (std::size_t p = 1; p < nq; ++p) {
      acc = alg.add(acc, alg.mul(h[p], a.transition(symbol, p, q)));
    }
    next.push_back(std::move(acc));
  }
  return next;
}

std::vector<Weight> prefix_vector(const WordAutomaton& a,
                                  const std::vector<std::size_t>& ids,
                                  std::size_t len) {
  std::vector<Weight> h = a.initial_vector();
  for (std::size_t i = 0; i < len; ++i) h = step(a, h, ids[i]);
  return h;
}

}  // namespace

std::vector<Weight> state_vector(const WordAutomaton& a, const Word& w) {
  const auto ids = a.encode(w);
  return prefix_vector(a, ids, ids.size());
}

Weight initial_semantics(const WordAutomaton& a, const Word& w) {
  const auto h = state_vector(a, w);
  const Algebra& alg = a.alg();
  Weight acc = alg.mul(h[0], a.final_weight(0));
  for (std::size_t q = 1; q < a.num_states(); ++q) {
    acc = alg.add(acc, alg.mul(h[q], a.final_weight(q)));
  }
  return acc;
}

Weight evaluate(const WordAutomaton& a, const Word& w, Semantics s, EvalOptions opts) {
  return s == Semantics::Run ? run_semantics(a, w, opts) : initial_semantics(a, w);
}

bool in_support(const WordAutomaton& a, const Word& w, Semantics s) {
  return !a.alg().is_zero(evaluate(a, w, s, {}));
}

Weight mixed_prefix_product(const WordAutomaton& a, const Word& w,
                            const WordRun& run, std::size_t i) {
  if (run.size() != w.size() + 1) {
    throw InvalidArgument("run has " + std::to_string(run.size()) +
                          " states, expected " + std::to_string(w.size() + 1));
  }
  if (i > w.size()) {
    throw InvalidArgument("prefix length " + std::to_string(i) + " exceeds word length " +
                          std::to_string(w.size()));
  }
  for (auto q : run) {
    if (q >= a.num_states()) throw InvalidArgument("run state out of range");
  }
  const auto ids = a.encode(w);
  const Algebra& alg = a.alg();
  Weight acc = prefix_vector(a, ids, i)[run[i]];
  for (std::size_t j = i; j < ids.size(); ++j) {
    acc = alg.mul(acc, a.transition(ids[j], run[j], run[j + 1]));
  }
  return alg.mul(acc, a.final_weight(run.back()));
}

std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet,
                                  std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : alphabet) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

ImagePair image_up_to(const WordAutomaton& a, std::size_t max_len, EvalOptions opts) {
  ImagePair image(a.alg());
  for (const auto& w : enumerate_words(a.alphabet(), max_len)) {
    image.run.insert(run_semantics(a, w, opts));
    image.init.insert(initial_semantics(a, w));
  }
  return image;
}

WordAutomaton special_automaton(AlgebraPtr alg, const Weight& a, const Weight& b,
                                const Weight& c, const std::string& gamma,
                                std::vector<std::string> alphabet) {
  if (std::find(alphabet.begin(), alphabet.end(), gamma) == alphabet.end()) {
    throw InvalidArgument("symbol '" + gamma + "' is not in the alphabet");
  }
  const Weight one = alg->one();
  WordAutomaton m(std::move(alg), std::move(alphabet), {"p", "q", "r"});
  m.set_initial(0, a);
  m.set_initial(1, b);
  const std::size_t g = m.symbol_index(gamma);
  m.set_transition(g, 0, 2, one);
  m.set_transition(g, 1, 2, one);
  m.set_final(2, c);
  return m;
}

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  auto is_symbol = [&](std::string_view s) {
    return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
  };
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.empty() || text == "ε") return {};

  if (text.find_first_of(" ,") != std::string_view::npos) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = text.find_first_of(" ,", i);
      if (j == std::string_view::npos) j = text.size();
      std::string_view tok = text.substr(i, j - i);
      if (!tok.empty()) {
        if (!is_symbol(tok)) {
          throw ParseError("unknown symbol '" + std::string(tok) + "' at offset " +
                           std::to_string(i));
        }
        w.emplace_back(tok);
      }
      i = j + 1;
    }
    return w;
  }

  // Longest match first, backtracking when the rest cannot be tokenized.
  std::vector<std::optional<bool>> memo(text.size() + 1);
  std::function<bool(std::size_t, Word&)> go = [&](std::size_t i, Word& out) {
    if (i == text.size()) return true;
    if (memo[i] && !*memo[i]) return false;
    std::vector<std::string> candidates;
    for (const auto& s : alphabet) {
      if (text.substr(i, s.size()) == s) candidates.push_back(s);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const std::string& x, const std::string& y) { return x.size() > y.size(); });
    for (const auto& s : candidates) {
      out.push_back(s);
      if (go(i + s.size(), out)) return true;
      out.pop_back();
    }
    memo[i] = false;
    return false;
  };
  Word w;
  if (!go(0, w)) {
    throw ParseError("cannot split '" + std::string(text) + "' into alphabet symbols");
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "ε";
  const bool single = std::all_of(w.begin(), w.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace sbwa
