#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sbwa/builtin.hpp"
#include "sbwa/counting.hpp"
#include "sbwa/error.hpp"
#include "sbwa/harness.hpp"
#include "sbwa/properties.hpp"
#include "sbwa/random.hpp"
#include "sbwa/tree.hpp"
#include "sbwa/tree_automaton.hpp"
#include "test_util.hpp"

namespace sbwa {
namespace {

using testing::el;

const RankedAlphabet kBinary{{{"alpha", 0}, {"sigma", 2}}};
const RankedAlphabet kUnaryBinary{{{"alpha", 0}, {"gamma", 1}, {"sigma", 2}}};
const RankedAlphabet kDelta{{{"alpha", 0}, {"beta", 0}, {"delta", 2}, {"sigma", 2}}};

TEST(RankedAlphabet, Classification) {
  const auto trivial = classify_alphabet(RankedAlphabet({{"alpha", 0}, {"beta", 0}}));
  EXPECT_TRUE(trivial.trivial);
  EXPECT_TRUE(trivial.monadic);
  EXPECT_FALSE(trivial.string_ranked);
  EXPECT_FALSE(trivial.branching);

  const auto str = classify_alphabet(RankedAlphabet({{"alpha", 0}, {"gamma", 1}, {"delta", 1}}));
  EXPECT_TRUE(str.string_ranked);
  EXPECT_TRUE(str.monadic);
  EXPECT_FALSE(str.trivial);

  const auto monadic = classify_alphabet(RankedAlphabet({{"alpha", 0}, {"beta", 0}, {"gamma", 1}}));
  EXPECT_TRUE(monadic.monadic);
  EXPECT_FALSE(monadic.string_ranked);

  const auto branching = classify_alphabet(kBinary);
  EXPECT_TRUE(branching.branching);
  EXPECT_FALSE(branching.monadic);
}

TEST(RankedAlphabet, ParseAndErrors) {
  const RankedAlphabet a = RankedAlphabet::parse(" alpha:0, sigma : 2 ");
  EXPECT_EQ(a, kBinary);
  EXPECT_EQ(a.to_string(), "alpha:0,sigma:2");
  EXPECT_EQ(a.max_rank(), 2u);
  EXPECT_EQ(a.of_rank(0), (std::vector<std::string>{"alpha"}));
  EXPECT_THROW(RankedAlphabet::parse("sigma:2"), ParseError);
  EXPECT_THROW(RankedAlphabet::parse("alpha"), ParseError);
  EXPECT_THROW(RankedAlphabet::parse("alpha:x"), ParseError);
  EXPECT_THROW(RankedAlphabet({{"alpha", 0}, {"alpha", 1}}), InvalidArgument);
}

TEST(Tree, ParsePrintAndValidate) {
  const Tree t = parse_tree("sigma( delta(alpha, beta) ,alpha)", kDelta);
  EXPECT_EQ(to_string(t), "sigma(delta(alpha,beta),alpha)");
  EXPECT_EQ(size(t), 5u);
  EXPECT_EQ(height(t), 2u);
  EXPECT_EQ(parse_tree(to_string(t)), t);
  EXPECT_THROW(parse_tree("sigma(alpha)", kDelta), ParseError);
  EXPECT_THROW(parse_tree("omega", kDelta), ParseError);
  EXPECT_THROW(parse_tree("sigma(alpha,alpha", kDelta), ParseError);
  EXPECT_THROW(parse_tree("sigma(alpha,alpha) x", kDelta), ParseError);
  try {
    parse_tree("sigma(alpha,,alpha)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 12"), std::string::npos) << e.what();
  }
}

std::vector<std::string> formatted(const std::vector<Position>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_position(p));
  return out;
}

TEST(Tree, PositionOrders) {
  const Tree t = parse_tree("sigma(delta(alpha,beta),alpha)", kDelta);
  EXPECT_EQ(formatted(positions(t)), (std::vector<std::string>{"ε", "1", "11", "12", "2"}));
  EXPECT_EQ(formatted(postorder(t)), (std::vector<std::string>{"11", "12", "1", "2", "ε"}));
  EXPECT_EQ(formatted(leaves(t)), (std::vector<std::string>{"11", "12", "2"}));
  EXPECT_EQ(to_string(subtree_at(t, {1})), "delta(alpha,beta)");
  EXPECT_EQ(label_at(t, {1, 2}), "beta");
  EXPECT_TRUE(is_position(t, {1, 1}));
  EXPECT_FALSE(is_position(t, {2, 1}));
  EXPECT_THROW(subtree_at(t, {3}), InvalidArgument);
  EXPECT_TRUE(is_prefix({1}, {1, 2}));
  EXPECT_TRUE(is_prefix({}, {1}));
  EXPECT_FALSE(is_prefix({2}, {1, 2}));
  EXPECT_TRUE(left_of({1, 2}, {2}));
  EXPECT_FALSE(left_of({1}, {1, 2}));
  EXPECT_EQ(format_position({1, 12}), "1.12");
}

// Number of trees with n nodes, by the obvious recursion.
std::size_t count_trees(const RankedAlphabet& sigma, std::size_t n,
                        std::map<std::size_t, std::size_t>& memo) {
  if (n == 0) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // ways[k][m]: sequences of k trees with m nodes in total.
  std::size_t total = 0;
  for (const auto& [name, rank] : sigma.symbols()) {
    std::vector<std::size_t> ways(n, 0);
    ways[0] = 1;
    for (std::size_t k = 0; k < rank; ++k) {
      std::vector<std::size_t> next(n, 0);
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t s = 1; m + s < n; ++s) next[m + s] += ways[m] * count_trees(sigma, s, memo);
      }
      ways = next;
    }
    total += ways[n - 1];
  }
  return memo[n] = total;
}

TEST(Tree, EnumerationCounts) {
  // Motzkin numbers for unary-binary trees.
  const std::vector<std::size_t> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_EQ(trees_of_size(kUnaryBinary, n).size(), motzkin[n - 1]);
  }
  for (const auto* sigma : {&kBinary, &kDelta}) {
    std::map<std::size_t, std::size_t> memo;
    for (std::size_t n = 1; n <= 9; ++n) {
      const auto trees = trees_of_size(*sigma, n);
      EXPECT_EQ(trees.size(), count_trees(*sigma, n, memo));
      std::set<Tree> unique(trees.begin(), trees.end());
      EXPECT_EQ(unique.size(), trees.size());
      for (const auto& t : trees) {
        EXPECT_EQ(size(t), n);
        EXPECT_NO_THROW(validate_tree(t, *sigma));
      }
    }
  }
}

TEST(Tree, EnumerationOrder) {
  const auto trees = enumerate_trees(kUnaryBinary, 3);
  std::vector<std::string> texts;
  for (const auto& t : trees) texts.push_back(to_string(t));
  EXPECT_EQ(texts, (std::vector<std::string>{"alpha", "gamma(alpha)", "gamma(gamma(alpha))",
                                             "sigma(alpha,alpha)"}));
}

// Reachable states of the automaton read as a nondeterministic tree automaton.
std::set<std::size_t> nfta_states(const TreeAutomaton& a, const Tree& t) {
  std::vector<std::set<std::size_t>> kids;
  for (const auto& c : t.children) kids.push_back(nfta_states(a, c));
  const std::size_t sym = a.alphabet().id(t.symbol);
  std::set<std::size_t> out;
  for (const auto& e : a.transitions()) {
    if (e.symbol != sym) continue;
    bool ok = true;
    for (std::size_t i = 0; i < kids.size(); ++i) ok = ok && kids[i].count(e.children[i]) > 0;
    if (ok) out.insert(e.target);
  }
  return out;
}

TEST(TreeAutomaton, BooleAgainstNfta) {
  const AlgebraPtr boole = builtin("Boole");
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_tree_automaton(boole, kUnaryBinary, 1 + i % 3, rng);
    for (const auto& t : enumerate_trees(kUnaryBinary, 6)) {
      bool accepted = false;
      for (std::size_t q : nfta_states(a, t)) accepted = accepted || !boole->is_zero(a.root_weight(q));
      ASSERT_EQ(in_support(a, t, Semantics::Run), accepted);
      ASSERT_EQ(in_support(a, t, Semantics::Init), accepted);
    }
  }
}

TEST(TreeAutomaton, RunWeightFormsAgree) {
  Rng rng(43);
  for (const auto& alg : bundled_finite_algebras()) {
    for (int i = 0; i < 10; ++i) {
      const auto a = random_tree_automaton(alg, kUnaryBinary, 1 + i % 3, rng);
      for (int j = 0; j < 20; ++j) {
        const Tree t = random_tree(kUnaryBinary, 7, rng);
        const TreeRun run = random_run(a, t, rng);
        ASSERT_EQ(run_weight(a, t, run), run_weight_postorder(a, t, run));
      }
    }
  }
}

TEST(RandomTree, CoversEveryTreeRoughlyUniformly) {
  Rng rng(44);
  const auto all = enumerate_trees(kUnaryBinary, 5);
  std::map<Tree, int> hits;
  const int draws = 200 * static_cast<int>(all.size());
  for (int i = 0; i < draws; ++i) {
    const Tree t = random_tree(kUnaryBinary, 5, rng);
    ASSERT_LE(size(t), 5u);
    ++hits[t];
  }
  ASSERT_EQ(hits.size(), all.size());
  for (const auto& t : all) {
    EXPECT_GT(hits[t], 120) << to_string(t);
    EXPECT_LT(hits[t], 280) << to_string(t);
  }
  EXPECT_THROW(random_tree(RankedAlphabet({{"gamma", 1}}), 4, rng), InvalidArgument);
}

TEST(RandomTree, LargeBoundsDoNotEnumerate) {
  Rng rng(45);
  const RankedAlphabet wide({{"alpha", 0}, {"gamma", 1}, {"sigma", 2}, {"tau", 3}});
  for (int i = 0; i < 50; ++i) EXPECT_LE(size(random_tree(wide, 40, rng)), 40u);
}

TEST(TreeAutomaton, NullaryRunWeightIsTransition) {
  const AlgebraPtr alg = builtin("B4");
  TreeAutomaton a(alg, kBinary, {"p", "q"});
  a.set_transition(0, {}, 1, el(*alg, "2"));
  EXPECT_EQ(alg->describe(run_weight(a, leaf("alpha"), {1})), "2");
  EXPECT_TRUE(alg->is_zero(run_weight(a, leaf("alpha"), {0})));
  EXPECT_THROW(run_weight(a, leaf("alpha"), {0, 1}), InvalidArgument);
}

TEST(TreeAutomaton, EnumerateRunsIsLexicographic) {
  const AlgebraPtr alg = builtin("Boole");
  TreeAutomaton a(alg, kBinary, {"p", "q"});
  const Tree t = parse_tree("sigma(alpha,alpha)", kBinary);
  const auto runs = enumerate_runs(a, t);
  ASSERT_EQ(runs.size(), 8u);
  EXPECT_EQ(runs[0], (TreeRun{0, 0, 0}));
  EXPECT_EQ(runs[1], (TreeRun{0, 0, 1}));
  EXPECT_EQ(runs[4], (TreeRun{1, 0, 0}));
}

// Positions of example_tree(k) in lexicographic order are ε, 1..k, k1..kk.
TreeRun rho_one(std::size_t k) {
  TreeRun run{5, 0};
  for (std::size_t i = 2; i < k; ++i) run.push_back(3);
  run.push_back(4);
  run.push_back(1);
  for (std::size_t i = 1; i < k; ++i) run.push_back(3);
  return run;
}

TEST(BranchingExample, Identities) {
  for (const auto& alg : bundled_finite_algebras()) {
    const auto elems = alg->elements();
    Rng rng(47);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::size_t k : {2u, 3u}) {
      const Tree xi = example_tree("sigma", "alpha", k);
      for (int trial = 0; trial < 20; ++trial) {
        const Weight a = elems[pick(rng)];
        const Weight b = elems[pick(rng)];
        const Weight b2 = elems[pick(rng)];
        const Weight c = elems[pick(rng)];
        const auto m = branching_example_automaton(alg, a, b, b2, c, k);
        const Weight init = alg->mul(alg->mul(a, alg->add(b, b2)), c);
        const Weight run = alg->add(alg->mul(alg->mul(a, b), c), alg->mul(alg->mul(a, b2), c));
        ASSERT_TRUE(alg->equal(initial_semantics(m, xi), init));
        ASSERT_TRUE(alg->equal(run_semantics(m, xi, EvalOptions{k > 2}), run));
        ASSERT_TRUE(alg->is_zero(run_semantics(m, leaf("alpha"))));
        ASSERT_TRUE(alg->equal(run_weight(m, xi, rho_one(k)), alg->mul(a, b)));
        const ImagePair im = image_up_to(m, 2 * k + 1, EvalOptions{true});
        WeightSet run_im(*alg);
        run_im.insert(alg->zero());
        run_im.insert(run);
        WeightSet init_im(*alg);
        init_im.insert(alg->zero());
        init_im.insert(init);
        ASSERT_TRUE(im.run.same_elements(run_im));
        ASSERT_TRUE(im.init.same_elements(init_im));
      }
    }
  }
}

TEST(BranchingExample, StatesAreDistinctWhenBEqualsBPrime) {
  const AlgebraPtr alg = builtin("Boole");
  const auto m = branching_example_automaton(alg, alg->one(), alg->one(), alg->one(), alg->one(), 2);
  EXPECT_EQ(m.states(), (std::vector<std::string>{"a", "(b,1)", "(b',2)", "1", "q1", "q2"}));
  EXPECT_THROW(branching_example_automaton(alg, alg->one(), alg->one(), alg->one(), alg->one(), 1),
               InvalidArgument);
}

TEST(BranchingExample, TruncFunInstantiation) {
  const AlgebraPtr alg = builtin("TruncFun(2)");
  const Weight g = el(*alg, "[0,1,0]");
  const auto m = branching_example_automaton(alg, g, g, g, alg->one(), 2);
  const Tree xi = parse_tree("sigma(alpha,sigma(alpha,alpha))", kBinary);
  EXPECT_EQ(alg->describe(run_semantics(m, xi)), "[0,2,0]");
  EXPECT_TRUE(alg->is_zero(initial_semantics(m, xi)));
}

TEST(TreeAutomaton, TrivialAlphabetSemanticsAgree) {
  const RankedAlphabet trivial({{"alpha", 0}, {"beta", 0}});
  Rng rng(53);
  for (const auto& alg : bundled_finite_algebras()) {
    for (int i = 0; i < 20; ++i) {
      const auto a = random_tree_automaton(alg, trivial, 1 + i % 3, rng);
      for (const auto& t : enumerate_trees(trivial, 3)) {
        ASSERT_TRUE(alg->equal(run_semantics(a, t), initial_semantics(a, t)));
      }
    }
  }
}

TEST(TreeAutomaton, DistributiveMeansEqualSemantics) {
  Rng rng(59);
  for (const char* name : {"Boole", "Diamond"}) {
    const AlgebraPtr alg = builtin(name);
    for (int i = 0; i < 30; ++i) {
      const auto a = random_tree_automaton(alg, kBinary, 1 + i % 3, rng);
      for (const auto& t : enumerate_trees(kBinary, 7)) {
        ASSERT_TRUE(alg->equal(run_semantics(a, t, EvalOptions{true}), initial_semantics(a, t)));
      }
    }
  }
}

TEST(TreeAutomaton, BiStronglyZsfMeansEqualSupports) {
  Rng rng(61);
  for (const char* name : {"PentagonN5", "Hexagon", "Boole"}) {
    const AlgebraPtr alg = builtin(name);
    for (int i = 0; i < 30; ++i) {
      const auto a = random_tree_automaton(alg, kBinary, 1 + i % 3, rng);
      for (const auto& t : enumerate_trees(kBinary, 7)) {
        ASSERT_EQ(!alg->is_zero(run_semantics(a, t, EvalOptions{true})),
                  in_support(a, t, Semantics::Init))
            << name;
      }
    }
  }
}

TEST(TreeAutomaton, PruningNeverChangesValues) {
  Rng rng(67);
  for (const auto& alg : bundled_finite_algebras()) {
    for (int i = 0; i < 5; ++i) {
      const auto a = random_tree_automaton(alg, kUnaryBinary, 2, rng);
      for (const auto& t : enumerate_trees(kUnaryBinary, 5)) {
        ASSERT_EQ(run_semantics(a, t), run_semantics(a, t, EvalOptions{true}));
      }
    }
  }
}

TEST(TreeAutomaton, RestrictionToNullary) {
  const RankedAlphabet sigma({{"alpha", 0}, {"beta", 0}, {"gamma", 1}});
  const AlgebraPtr alg = builtin("B4");
  Rng rng(71);
  const auto a = random_tree_automaton(alg, sigma, 2, rng);
  const auto ra = restrict_to_nullary(a, "alpha");
  const auto rb = restrict_to_nullary(a, "beta");
  EXPECT_EQ(ra.alphabet().to_string(), "alpha:0,gamma:1");
  const auto all = enumerate_trees(sigma, 5);
  const auto ta = enumerate_trees(ra.alphabet(), 5);
  const auto tb = enumerate_trees(rb.alphabet(), 5);
  EXPECT_EQ(all.size(), ta.size() + tb.size());
  std::set<Tree> united(ta.begin(), ta.end());
  united.insert(tb.begin(), tb.end());
  EXPECT_EQ(united, std::set<Tree>(all.begin(), all.end()));
  for (const auto& t : ta) {
    for (Semantics s : {Semantics::Run, Semantics::Init}) {
      EXPECT_EQ(evaluate(ra, t, s), evaluate(a, t, s));
    }
  }
  for (const auto& t : all) {
    const Tree* bottom = &t;
    while (!bottom->children.empty()) bottom = &bottom->children.front();
    const auto& part = bottom->symbol == "alpha" ? ra : rb;
    EXPECT_EQ(in_support(a, t, Semantics::Run), in_support(part, t, Semantics::Run));
  }
  EXPECT_THROW(restrict_to_nullary(a, "gamma"), InvalidArgument);
  EXPECT_THROW(restrict_to_nullary(random_tree_automaton(alg, kBinary, 1, rng), "alpha"),
               InvalidArgument);
}

TEST(TreeAutomaton, ImageBounds) {
  const AlgebraPtr alg = builtin("Hexagon");
  Rng rng(73);
  const auto a = random_tree_automaton(alg, kBinary, 2, rng);
  const ImagePair one = image_up_to(a, 1);
  WeightSet expected(*alg);
  expected.insert(run_semantics(a, leaf("alpha")));
  EXPECT_TRUE(one.run.same_elements(expected));
  EXPECT_THROW(image_up_to(a, 0), InvalidArgument);
}

TEST(TreeAutomaton, OperationCounts) {
  const AlgebraPtr alg = builtin("PentagonN5");
  Rng rng(79);
  for (std::size_t states = 1; states <= 3; ++states) {
    const auto a = random_tree_automaton(alg, kUnaryBinary, states, rng);
    auto counted = wrap_counting(alg);
    const auto c = a.with_algebra(counted);
    for (const auto& t : enumerate_trees(kUnaryBinary, 5)) {
      const std::uint64_t q = states;
      std::uint64_t muls = q;
      std::uint64_t adds = q - 1;
      for (const auto& p : positions(t)) {
        const std::size_t k = subtree_at(t, p).children.size();
        if (k == 0) continue;
        std::uint64_t qk = 1;
        for (std::size_t i = 0; i < k; ++i) qk *= q;
        muls += q * qk * k;
        adds += q * (qk - 1);
      }
      counted->reset_counts();
      initial_semantics(c, t);
      EXPECT_EQ(counted->read_counts(), (OpCounts{adds, muls})) << to_string(t);
      EXPECT_EQ(predicted_tree_cost(Semantics::Init, states, t), (OpCounts{adds, muls}));

      std::uint64_t runs = 1;
      for (std::size_t i = 0; i < size(t); ++i) runs *= q;
      counted->reset_counts();
      run_semantics(c, t);
      EXPECT_EQ(counted->read_counts(), (OpCounts{runs - 1, runs * size(t)})) << to_string(t);
    }
  }
}

TEST(TreeAutomaton, InitCostIsLinearInSize) {
  const AlgebraPtr alg = builtin("Boole");
  Rng rng(83);
  auto counted = wrap_counting(alg);
  const auto a = random_tree_automaton(alg, kBinary, 3, rng).with_algebra(counted);
  std::vector<std::uint64_t> costs;
  Tree t = leaf("alpha");
  for (int i = 0; i < 6; ++i) {
    counted->reset_counts();
    initial_semantics(a, t);
    const auto c = counted->read_counts();
    costs.push_back(c.adds + c.muls);
    t = node("sigma", {leaf("alpha"), t});
  }
  for (std::size_t i = 2; i < costs.size(); ++i) {
    EXPECT_EQ(costs[i] - costs[i - 1], costs[1] - costs[0]);
  }
}

}  // namespace
}  // namespace sbwa
