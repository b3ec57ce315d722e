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

#include "sbwa/harness.hpp"

#include <functional>

#include "sbwa/bridge.hpp"
#include "sbwa/builtin.hpp"
#include "sbwa/error.hpp"
#include "sbwa/random.hpp"

namespace sbwa {

void TheoremCheckConfig::validate() const {
  auto positive = [](std::size_t v, const char* what) {
    if (v < 1) throw InvalidArgument(std::string(what) + " must be >= 1");
  };
  positive(max_word_length, "max word length");
  positive(max_tree_size, "max tree size");
  positive(num_automata, "number of automata");
  positive(max_states, "max states");
  if (word_alphabet.empty()) throw InvalidArgument("word alphabet is empty");
  if (!(zero_bias >= 0.0 && zero_bias <= 1.0)) {
    throw InvalidArgument("zero bias must lie in [0, 1]");
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::PredictedCounterexample: return "predicted-counterexample";
    case Verdict::UnexpectedCounterexample: return "unexpected-counterexample";
  }
  return "?";
}

bool revalidate(const Counterexample& ce) {
  return std::visit(
      [&](const auto& automaton) {
        using A = std::decay_t<decltype(automaton)>;
        const Algebra& alg = automaton.alg();
        Weight run;
        Weight init;
        if constexpr (std::is_same_v<A, WordAutomaton>) {
          const auto* w = std::get_if<Word>(&ce.input);
          if (w == nullptr) return false;
          run = run_semantics(automaton, *w);
          init = initial_semantics(automaton, *w);
        } else {
          const auto* t = std::get_if<Tree>(&ce.input);
          if (t == nullptr) return false;
          run = run_semantics(automaton, *t);
          init = initial_semantics(automaton, *t);
        }
        return alg.equal(run, ce.run_value) && alg.equal(init, ce.init_value);
      },
      ce.automaton);
}

namespace {

constexpr EvalOptions kPruned{true};

void require_finite(const Algebra& alg) {
  if (!alg.is_finite()) {
    throw EnumerationError("theorem checks need a finite algebra; " + alg.name() +
                           " is infinite");
  }
}

std::vector<std::string> labels(const Algebra& alg, const std::vector<Weight>& ws) {
  return describe_all(alg, ws);
}

std::string tuple_text(const Algebra& alg, const std::vector<Weight>& ws) {
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out += (i ? ", " : "") + alg.describe(ws[i]);
  }
  return out + ")";
}

void finish(CheckReport& report) {
  bool mismatch = false;
  for (const auto& s : report.subchecks) mismatch = mismatch || !s.consistent();
  if (mismatch) {
    report.verdict = Verdict::UnexpectedCounterexample;
  } else if (!report.counterexamples.empty()) {
    report.verdict = Verdict::PredictedCounterexample;
  } else {
    report.verdict = Verdict::Consistent;
  }
}

// Which support inclusions the random sweep must confirm.
struct Expectation {
  bool run_in_init = false;
  bool init_in_run = false;
  bool values_equal = false;
};

struct SweepResult {
  bool run_in_init = true;
  bool init_in_run = true;
  bool values_equal = true;
};

template <class Automaton, class Input>
void record_violation(CheckReport& report, const std::string& reason,
                      const Automaton& a, const Input& input, Weight run, Weight init) {
  if (report.counterexamples.size() >= 5) return;
  report.counterexamples.push_back(
      Counterexample{reason, {}, a, input, std::move(run), std::move(init)});
}

SweepResult sweep_words(const AlgebraPtr& alg, const TheoremCheckConfig& config,
                        const Expectation& expect, CheckReport& report) {
  Rng rng(config.seed);
  std::uniform_int_distribution<std::size_t> states(1, config.max_states);
  const auto words = enumerate_words(config.word_alphabet, config.max_word_length);
  SweepResult result;
  for (std::size_t i = 0; i < config.num_automata; ++i) {
    const std::size_t nq = states(rng);
    const auto a = random_word_automaton(alg, config.word_alphabet, nq, rng, config.zero_bias);
    ++report.automata_checked;
    for (const auto& w : words) {
      ++report.inputs_checked;
      Weight run = run_semantics(a, w, kPruned);
      Weight init = initial_semantics(a, w);
      const bool r = !alg->is_zero(run);
      const bool n = !alg->is_zero(init);
      const std::string where = "random automaton #" + std::to_string(i) + ", word " +
                                format_word(w);
      if (r && !n) {
        if (expect.run_in_init && result.run_in_init) {
          record_violation(report, "supp(run) not within supp(init): " + where, a, w, run, init);
        }
        result.run_in_init = false;
      }
      if (n && !r) {
        if (expect.init_in_run && result.init_in_run) {
          record_violation(report, "supp(init) not within supp(run): " + where, a, w, run, init);
        }
        result.init_in_run = false;
      }
      if (!alg->equal(run, init)) result.values_equal = false;
    }
  }
  return result;
}

SweepResult sweep_trees(const AlgebraPtr& alg, const TheoremCheckConfig& config,
                        const Expectation& expect, CheckReport& report) {
  Rng rng(config.seed);
  std::uniform_int_distribution<std::size_t> states(1, config.max_states);
  const auto trees = enumerate_trees(config.tree_alphabet, config.max_tree_size);
  SweepResult result;
  for (std::size_t i = 0; i < config.num_automata; ++i) {
    const std::size_t nq = states(rng);
    const auto a =
        random_tree_automaton(alg, config.tree_alphabet, nq, rng, config.zero_bias);
    ++report.automata_checked;
    for (const auto& t : trees) {
      ++report.inputs_checked;
      Weight run = run_semantics(a, t, kPruned);
      Weight init = initial_semantics(a, t);
      const bool r = !alg->is_zero(run);
      const bool n = !alg->is_zero(init);
      const std::string where = "random automaton #" + std::to_string(i) + ", tree " +
                                to_string(t);
      if (r && !n) {
        if (expect.run_in_init && result.run_in_init) {
          record_violation(report, "supp(run) not within supp(init): " + where, a, t, run, init);
        }
        result.run_in_init = false;
      }
      if (n && !r) {
        if (expect.init_in_run && result.init_in_run) {
          record_violation(report, "supp(init) not within supp(run): " + where, a, t, run, init);
        }
        result.init_in_run = false;
      }
      if (!alg->equal(run, init)) {
        if (expect.values_equal && result.values_equal) {
          record_violation(report, "run and init values differ: " + where, a, t, run, init);
        }
        result.values_equal = false;
      }
    }
  }
  return result;
}

void add_sweep_subchecks(CheckReport& report, const Expectation& expect,
                         const SweepResult& result) {
  if (expect.run_in_init) {
    report.subchecks.push_back(
        {"supp(run) within supp(init) on random automata", true, result.run_in_init});
  }
  if (expect.init_in_run) {
    report.subchecks.push_back(
        {"supp(init) within supp(run) on random automata", true, result.init_in_run});
  }
  if (expect.values_equal) {
    report.subchecks.push_back(
        {"run and init values equal on random automata", true, result.values_equal});
  }
}

// Builds the witness automaton for a failed half and evaluates it on its
// distinguished input.
using WitnessBuilder =
    std::function<std::pair<AnyAutomaton, AnyInput>(const std::vector<Weight>&)>;

void examine_half(const AlgebraPtr& alg, Property half, const WitnessBuilder& build,
                  CheckReport& report) {
  const PropertyVerdict v = check(*alg, half);
  const bool run_to_init = half == Property::RunToInit || half == Property::TreeRunToInit;
  if (v.holds) return;
  auto [automaton, input] = build(v.witness);
  Weight run;
  Weight init;
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, WordAutomaton>) {
          const auto& w = std::get<Word>(input);
          run = run_semantics(a, w);
          init = initial_semantics(a, w);
        } else {
          const auto& t = std::get<Tree>(input);
          run = run_semantics(a, t);
          init = initial_semantics(a, t);
        }
      },
      automaton);
  const bool r = !alg->is_zero(run);
  const bool n = !alg->is_zero(init);
  const bool predicted = run_to_init ? (r && !n) : (n && !r);
  const std::string direction = run_to_init ? "in supp(run) but not supp(init)"
                                            : "in supp(init) but not supp(run)";
  report.subchecks.push_back({property_name(half) + " fails at " +
                                  tuple_text(*alg, v.witness) + ": witness input " +
                                  direction,
                              true, predicted});
  report.counterexamples.push_back(Counterexample{
      property_name(half) + " fails; witness input lies " + direction,
      labels(*alg, v.witness), std::move(automaton), std::move(input), run, init});
}

// Special word automaton over the monadic tree alphabet, via the string
// encoding with alpha as end marker.
std::pair<AnyAutomaton, AnyInput> monadic_witness(const AlgebraPtr& alg,
                                                  const RankedAlphabet& sigma,
                                                  const std::vector<Weight>& w) {
  const auto letters = sigma.of_rank(1);
  const std::string alpha = sigma.of_rank(0).front();
  const auto word_automaton = special_automaton(alg, w[0], w[1], w[2], letters.front(), letters);
  TreeAutomaton t = wsa_to_wta(word_automaton, alpha).with_alphabet(sigma);
  return {AnyAutomaton{std::move(t)}, AnyInput{word_to_tree({letters.front()}, alpha)}};
}

std::pair<std::string, std::string> branching_symbols(const RankedAlphabet& sigma) {
  std::string alpha = sigma.of_rank(0).front();
  for (const auto& [name, rank] : sigma.symbols()) {
    if (rank >= 2) return {name, alpha};
  }
  throw InvalidArgument("alphabet " + sigma.to_string() + " is not branching");
}

CheckReport make_report(const std::string& theorem, const Algebra& alg,
                        const TheoremCheckConfig& config) {
  CheckReport report;
  report.theorem = theorem;
  report.algebra = alg.name();
  report.seed = config.seed;
  return report;
}

}  // namespace

CheckReport check_support_theorem_words(const AlgebraPtr& alg,
                                        const TheoremCheckConfig& config) {
  config.validate();
  require_finite(*alg);
  CheckReport report = make_report("support-words", *alg, config);
  report.hypothesis = "StronglyZSF";
  if (!check(*alg, Property::ZeroSumFree).holds) {
    report.notes.push_back(alg->name() +
                           " is not zero-sum-free; the support characterization does not apply");
    finish(report);
    return report;
  }
  report.hypothesis_holds = check(*alg, Property::StronglyZSF).holds;

  Expectation expect;
  expect.run_in_init = check(*alg, Property::RunToInit).holds;
  expect.init_in_run = check(*alg, Property::InitToRun).holds;
  const SweepResult result = sweep_words(alg, config, expect, report);
  add_sweep_subchecks(report, expect, result);

  const std::string gamma = config.word_alphabet.front();
  const WitnessBuilder build = [&](const std::vector<Weight>& w) {
    return std::pair<AnyAutomaton, AnyInput>{
        special_automaton(alg, w[0], w[1], w[2], gamma, config.word_alphabet), Word{gamma}};
  };
  examine_half(alg, Property::RunToInit, build, report);
  examine_half(alg, Property::InitToRun, build, report);
  finish(report);
  return report;
}

CheckReport check_support_theorem_words(const TheoremCheckConfig& config) {
  return check_support_theorem_words(builtin(config.algebra), config);
}

CheckReport check_support_theorem_trees(const AlgebraPtr& alg,
                                        const TheoremCheckConfig& config) {
  config.validate();
  require_finite(*alg);
  CheckReport report = make_report("support-trees", *alg, config);
  const RankedAlphabet& sigma = config.tree_alphabet;
  const AlphabetClass cls = classify_alphabet(sigma);

  if (cls.trivial) {
    report.hypothesis = "none (trivial alphabet)";
    report.hypothesis_holds = true;
    Expectation expect{true, true, true};
    const SweepResult result = sweep_trees(alg, config, expect, report);
    add_sweep_subchecks(report, expect, result);
    finish(report);
    return report;
  }

  if (!check(*alg, Property::ZeroSumFree).holds) {
    report.hypothesis = cls.branching ? "BiStronglyZSF" : "StronglyZSF";
    report.notes.push_back(alg->name() +
                           " is not zero-sum-free; the support characterization does not apply");
    finish(report);
    return report;
  }

  const Property to_init = cls.branching ? Property::TreeRunToInit : Property::RunToInit;
  const Property to_run = cls.branching ? Property::TreeInitToRun : Property::InitToRun;
  report.hypothesis = cls.branching ? "BiStronglyZSF" : "StronglyZSF";
  report.hypothesis_holds =
      check(*alg, cls.branching ? Property::BiStronglyZSF : Property::StronglyZSF).holds;

  Expectation expect;
  expect.run_in_init = check(*alg, to_init).holds;
  expect.init_in_run = check(*alg, to_run).holds;
  const SweepResult result = sweep_trees(alg, config, expect, report);
  add_sweep_subchecks(report, expect, result);

  WitnessBuilder build;
  if (cls.branching) {
    const auto [sigma_name, alpha] = branching_symbols(sigma);
    const std::size_t k = sigma.rank_of(sigma_name);
    build = [&, sigma_name = sigma_name, alpha = alpha, k](const std::vector<Weight>& w) {
      return std::pair<AnyAutomaton, AnyInput>{
          branching_example_automaton(alg, w[0], w[1], w[2], w[3], sigma, sigma_name, alpha),
          example_tree(sigma_name, alpha, k)};
    };
  } else {
    build = [&](const std::vector<Weight>& w) { return monadic_witness(alg, sigma, w); };
  }
  examine_half(alg, to_init, build, report);
  examine_half(alg, to_run, build, report);
  finish(report);
  return report;
}

CheckReport check_support_theorem_trees(const TheoremCheckConfig& config) {
  return check_support_theorem_trees(builtin(config.algebra), config);
}

namespace {

// Calls visit(tuple) for every tuple of the carrier of the given arity,
// first component outermost.
void for_each_tuple(const std::vector<Weight>& els, std::size_t arity,
                    const std::function<void(const std::vector<Weight>&)>& visit) {
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Weight> tuple(arity);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = els[idx[i]];
    visit(tuple);
    std::size_t pos = arity;
    while (true) {
      --pos;
      if (++idx[pos] < els.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

struct ImageSweep {
  bool all_agree = true;
  std::optional<Counterexample> first;
};

}  // namespace

CheckReport check_image_theorem(const AlgebraPtr& alg, ImageMode mode,
                                const TheoremCheckConfig& config) {
  config.validate();
  require_finite(*alg);
  const auto els = alg->elements();
  const Weight one = alg->one();
  CheckReport report =
      make_report(mode == ImageMode::Words ? "image-words" : "image-trees", *alg, config);
  const bool rd = check(*alg, Property::RightDistributive).holds;
  const bool ld = check(*alg, Property::LeftDistributive).holds;

  auto note_first = [&](ImageSweep& sweep, const std::vector<Weight>& tuple,
                        AnyAutomaton automaton, AnyInput input, const ImagePair& image,
                        const Weight& run, const Weight& init) {
    if (!image.agree()) {
      if (sweep.all_agree) {
        sweep.first = Counterexample{"images differ at " + tuple_text(*alg, tuple),
                                     labels(*alg, tuple),
                                     std::move(automaton),
                                     std::move(input),
                                     run,
                                     init};
      }
      sweep.all_agree = false;
    }
  };

  auto conclude = [&](bool hypothesis, ImageSweep& sweep, const std::string& label) {
    report.subchecks.push_back({label, hypothesis, sweep.all_agree});
    if (!sweep.all_agree && sweep.first) report.counterexamples.push_back(*sweep.first);
  };

  const AlphabetClass cls = classify_alphabet(config.tree_alphabet);
  if (mode == ImageMode::Words || !cls.branching) {
    if (mode == ImageMode::Trees && cls.trivial) {
      report.hypothesis = "none (trivial alphabet)";
      report.hypothesis_holds = true;
      Expectation expect{false, false, true};
      const SweepResult result = sweep_trees(alg, config, expect, report);
      add_sweep_subchecks(report, expect, result);
      finish(report);
      return report;
    }
    report.hypothesis = "RightDistributive";
    report.hypothesis_holds = rd;
    ImageSweep sweep;
    const bool words = mode == ImageMode::Words;
    const auto letters = words ? config.word_alphabet : config.tree_alphabet.of_rank(1);
    const std::string gamma = letters.front();
    for_each_tuple(els, 3, [&](const std::vector<Weight>& t) {
      ++report.automata_checked;
      const auto a = special_automaton(alg, t[0], t[1], t[2], gamma, letters);
      if (words) {
        const ImagePair image = image_up_to(a, 1, kPruned);
        report.inputs_checked += 1 + letters.size();
        const Word w{gamma};
        note_first(sweep, t, a, w, image, run_semantics(a, w), initial_semantics(a, w));
      } else {
        const std::string alpha = config.tree_alphabet.of_rank(0).front();
        const auto b = wsa_to_wta(a, alpha).with_alphabet(config.tree_alphabet);
        const ImagePair image = image_up_to(b, 2, kPruned);
        report.inputs_checked += enumerate_trees(config.tree_alphabet, 2).size();
        const Tree x = word_to_tree({gamma}, alpha);
        note_first(sweep, t, b, x, image, run_semantics(b, x), initial_semantics(b, x));
      }
    });
    conclude(rd, sweep, "images agree for every (a, b, c)");
    finish(report);
    return report;
  }

  // Branching alphabet: the example automaton over all quadruples.  Its c = 1
  // slice decides left-distributivity, its a = 1 slice right-distributivity.
  report.hypothesis = "RightDistributive and LeftDistributive";
  report.hypothesis_holds = rd && ld;
  const auto [sigma_name, alpha] = branching_symbols(config.tree_alphabet);
  const std::size_t k = config.tree_alphabet.rank_of(sigma_name);
  const std::size_t bound = 2 * k + 1;
  const Tree xi = example_tree(sigma_name, alpha, k);
  const std::size_t trees = enumerate_trees(config.tree_alphabet, bound).size();
  ImageSweep all;
  ImageSweep c_one;
  ImageSweep a_one;
  for_each_tuple(els, 4, [&](const std::vector<Weight>& t) {
    ++report.automata_checked;
    report.inputs_checked += trees;
    const auto a = branching_example_automaton(alg, t[0], t[1], t[2], t[3],
                                               config.tree_alphabet, sigma_name, alpha);
    const ImagePair image = image_up_to(a, bound, kPruned);
    const Weight run = run_semantics(a, xi, kPruned);
    const Weight init = initial_semantics(a, xi);
    note_first(all, t, a, xi, image, run, init);
    if (alg->equal(t[3], one)) note_first(c_one, t, a, xi, image, run, init);
    if (alg->equal(t[0], one)) note_first(a_one, t, a, xi, image, run, init);
  });
  conclude(rd && ld, all, "images agree for every (a, b, b', c)");
  report.subchecks.push_back({"images agree for every (a, b, b', 1)", ld, c_one.all_agree});
  report.subchecks.push_back({"images agree for every (1, b, b', c)", rd, a_one.all_agree});
  finish(report);
  return report;
}

CostProfile cost_profile(const WordAutomaton& a, const Word& w) {
  const auto counting = wrap_counting(a.algebra());
  const WordAutomaton counted = a.with_algebra(counting);
  CostProfile profile;
  profile.num_states = a.num_states();
  profile.input_size = w.size();
  for (Semantics s : {Semantics::Run, Semantics::Init}) {
    counting->reset_counts();
    Weight value = evaluate(counted, w, s);
    profile.rows.push_back({s, counting->read_counts(),
                            predicted_word_cost(s, a.num_states(), w.size()), value});
  }
  return profile;
}

CostProfile cost_profile(const TreeAutomaton& a, const Tree& t) {
  const auto counting = wrap_counting(a.algebra());
  const TreeAutomaton counted = a.with_algebra(counting);
  CostProfile profile;
  profile.num_states = a.num_states();
  profile.input_size = size(t);
  for (Semantics s : {Semantics::Run, Semantics::Init}) {
    counting->reset_counts();
    Weight value = evaluate(counted, t, s);
    profile.rows.push_back(
        {s, counting->read_counts(), predicted_tree_cost(s, a.num_states(), t), value});
  }
  return profile;
}

namespace {

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

OpCounts predicted_word_cost(Semantics s, std::size_t num_states, std::size_t length) {
  const std::uint64_t q = num_states;
  const std::uint64_t n = length;
  if (s == Semantics::Run) {
    const std::uint64_t runs = power(q, length + 1);
    return {runs - 1, runs * (n + 1)};
  }
  return {n * q * (q - 1) + (q - 1), n * q * q + q};
}

OpCounts predicted_tree_cost(Semantics s, std::size_t num_states, const Tree& t) {
  const std::uint64_t q = num_states;
  if (s == Semantics::Run) {
    const std::uint64_t n = size(t);
    const std::uint64_t runs = power(q, n);
    return {runs - 1, runs * n};
  }
  OpCounts c{q - 1, q};
  std::function<void(const Tree&)> walk = [&](const Tree& x) {
    const std::size_t k = x.children.size();
    if (k > 0) {
      const std::uint64_t words = power(q, k);
      c.muls += q * words * k;
      c.adds += q * (words - 1);
    }
    for (const auto& child : x.children) walk(child);
  };
  walk(t);
  return c;
}

}  // namespace sbwa
