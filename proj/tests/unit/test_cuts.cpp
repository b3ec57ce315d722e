#include <gtest/gtest.h>

#include <set>

#include "sbwa/builtin.hpp"
#include "sbwa/cut.hpp"
#include "sbwa/error.hpp"
#include "sbwa/random.hpp"
#include "sbwa/tree.hpp"
#include "sbwa/tree_automaton.hpp"

namespace sbwa {
namespace {

const RankedAlphabet kUnaryBinary{{{"alpha", 0}, {"gamma", 1}, {"sigma", 2}}};

std::size_t count_cuts(const Tree& t) {
  if (t.children.empty()) return 1;
  std::size_t product = 1;
  for (const auto& c : t.children) product *= count_cuts(c);
  return 1 + product;
}

TEST(Cuts, Examples) {
  const RankedAlphabet delta({{"alpha", 0}, {"beta", 0}, {"delta", 2}, {"sigma", 2}});
  const Tree t = parse_tree("sigma(delta(alpha,beta),alpha)", delta);
  EXPECT_EQ(format_cut(lcut(t)), "(11, 12, 2)");
  EXPECT_EQ(format_cut(root_cut()), "(ε)");

  const Tree xi = example_tree("sigma", "alpha", 2);
  EXPECT_EQ(format_cut(expand(xi, root_cut(), 0)), "(1, 2)");

  // Tree with a cut through 11, 12, 13, 21, 22, 3.
  const RankedAlphabet fig({{"alpha", 0}, {"sigma", 2}, {"tau", 3}});
  const Tree f = parse_tree("tau(tau(alpha,alpha,alpha),sigma(alpha,alpha),alpha)", fig);
  const Cut kappa{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3}};
  ASSERT_TRUE(is_valid_cut(f, kappa));
  EXPECT_EQ(format_cut(merge(f, kappa, 3)), "(11, 12, 13, 2, 3)");
  EXPECT_FALSE(can_merge(f, kappa, 1));
  EXPECT_FALSE(can_merge(f, kappa, 2));
  EXPECT_THROW(merge(f, kappa, 2), InvalidArgument);
  EXPECT_THROW(expand(f, kappa, 0), InvalidArgument);
  EXPECT_THROW(expand(f, kappa, 9), InvalidArgument);
}

TEST(Cuts, ValidityChecks) {
  const Tree t = parse_tree("sigma(gamma(alpha),alpha)", kUnaryBinary);
  EXPECT_TRUE(is_valid_cut(t, {{1}, {2}}));
  EXPECT_FALSE(is_valid_cut(t, {{2}, {1}}));          // not ordered
  EXPECT_FALSE(is_valid_cut(t, {{1}}));                // not complete
  EXPECT_FALSE(is_valid_cut(t, {{1}, {1, 1}, {2}}));   // not independent
  EXPECT_FALSE(is_valid_cut(t, {{1}, {3}}));           // not a position
}

TEST(Cuts, AllCutsExhaustive) {
  for (const auto& t : enumerate_trees(kUnaryBinary, 9)) {
    const auto cuts = all_cuts(t);
    ASSERT_EQ(cuts.size(), count_cuts(t)) << to_string(t);
    std::set<Cut> unique(cuts.begin(), cuts.end());
    ASSERT_EQ(unique.size(), cuts.size());
    std::size_t expand_nf = 0;
    std::size_t merge_nf = 0;
    for (const auto& c : cuts) {
      ASSERT_TRUE(is_valid_cut(t, c));
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (can_expand(t, c, i)) {
          const Cut e = expand(t, c, i);
          ASSERT_TRUE(is_valid_cut(t, e));
          ASSERT_EQ(e.size() + 1, c.size() + subtree_at(t, c[i]).children.size());
        }
        if (can_merge(t, c, i)) ASSERT_TRUE(is_valid_cut(t, merge(t, c, i)));
      }
      if (is_normal_form(t, c, CutRelation::Expand)) {
        ++expand_nf;
        ASSERT_EQ(c, lcut(t));
      }
      if (is_normal_form(t, c, CutRelation::Merge)) {
        ++merge_nf;
        ASSERT_EQ(c, root_cut());
      }
    }
    ASSERT_EQ(expand_nf, 1u);
    ASSERT_EQ(merge_nf, 1u);
  }
}

TEST(Cuts, RandomMaximalChains) {
  Rng rng(89);
  for (const auto& t : enumerate_trees(kUnaryBinary, 9)) {
    for (int trial = 0; trial < 3; ++trial) {
      Cut c = root_cut();
      while (true) {
        std::vector<std::size_t> options;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (can_expand(t, c, i)) options.push_back(i);
        }
        if (options.empty()) break;
        c = expand(t, c, options[rng() % options.size()]);
      }
      ASSERT_EQ(c, lcut(t));
      while (true) {
        std::vector<std::size_t> options;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (can_merge(t, c, i)) options.push_back(i);
        }
        if (options.empty()) break;
        c = merge(t, c, options[rng() % options.size()]);
      }
      ASSERT_EQ(c, root_cut());
    }
  }
}

TEST(Cuts, PartialProductBoundaries) {
  Rng rng(97);
  for (const auto& alg : bundled_finite_algebras()) {
    const auto a = random_tree_automaton(alg, kUnaryBinary, 3, rng);
    for (int j = 0; j < 30; ++j) {
      const Tree t = random_tree(kUnaryBinary, 7, rng);
      const TreeRun run = random_run(a, t, rng);
      const Weight f = a.root_weight(run[0]);
      ASSERT_EQ(cut_partial_product(a, t, run, lcut(t)), alg->mul(run_weight(a, t, run), f));
      ASSERT_EQ(cut_partial_product(a, t, run, root_cut()),
                alg->mul(state_vector(a, t)[run[0]], f));
    }
  }
}

TEST(Cuts, PartialProductNonzeroOverPentagon) {
  const AlgebraPtr alg = builtin("PentagonN5");
  const RankedAlphabet binary({{"alpha", 0}, {"sigma", 2}});
  Rng rng(101);
  std::size_t witnessed = 0;
  for (int i = 0; i < 20; ++i) {
    const auto a = random_tree_automaton(alg, binary, 2, rng, 0.3);
    for (const auto& t : enumerate_trees(binary, 7)) {
      const auto cuts = all_cuts(t);
      for_each_run(a, t, [&](const TreeRun& run) {
        if (alg->is_zero(alg->mul(run_weight(a, t, run), a.root_weight(run[0])))) return;
        ++witnessed;
        for (const auto& c : cuts) ASSERT_FALSE(alg->is_zero(cut_partial_product(a, t, run, c)));
      });
    }
  }
  EXPECT_GT(witnessed, 0u);
}

TEST(Cuts, PartialProductRejectsNonCut) {
  const AlgebraPtr alg = builtin("Boole");
  TreeAutomaton a(alg, kUnaryBinary, {"q"});
  const Tree t = parse_tree("sigma(alpha,alpha)", kUnaryBinary);
  EXPECT_THROW(cut_partial_product(a, t, {0, 0, 0}, {{1}}), InvalidArgument);
}

}  // namespace
}  // namespace sbwa
