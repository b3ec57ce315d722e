#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "sbwa/builtin.hpp"
#include "sbwa/counting.hpp"
#include "sbwa/error.hpp"
#include "sbwa/polynomial.hpp"
#include "sbwa/table_algebra.hpp"
#include "test_util.hpp"

namespace sbwa {
namespace {

using testing::el;

TEST(Polynomial, NormalizesAndPrints) {
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial({2, 0, 3}).to_string(), "2+3x^2");
  EXPECT_EQ(Polynomial({0, 1}).to_string(), "x");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial({1, 0, 0}).degree(), 0);
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, ParseRoundTrip) {
  for (const char* text : {"0", "1", "x", "2+3x^2", "x+x^3", "7x^5"}) {
    EXPECT_EQ(Polynomial::parse(text).to_string(), text);
  }
  EXPECT_EQ(Polynomial::parse("3x^2 + 1 + x^2"), Polynomial({1, 0, 4}));
  EXPECT_THROW(Polynomial::parse("x^"), ParseError);
  EXPECT_THROW(Polynomial::parse("-1"), ParseError);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p({1, 1});  // 1+x
  const Polynomial q({0, 2});  // 2x
  EXPECT_EQ(p + q, Polynomial({1, 3}));
  EXPECT_EQ(p * p, Polynomial({1, 2, 1}));
  EXPECT_EQ(p.scaled(3), Polynomial({3, 3}));
  EXPECT_EQ(q.at_zero(), 0);
  EXPECT_EQ(p.at_zero(), 1);
  EXPECT_TRUE(q.is_monome());
  EXPECT_FALSE(p.is_monome());
  EXPECT_TRUE(Polynomial().is_monome());
}

TEST(Polynomial, CoefficientsDoNotOverflow) {
  Polynomial p = Polynomial::constant(Natural(1) << 62);
  p = p * p * p;
  EXPECT_EQ(p.coefficient(0), Natural(1) << 186);
}

TEST(NatPlusPlus, PaperExample) {
  NatPlusPlus alg;
  // ⊗ is ordinary addition: 3 ⊗ 2 = 5.
  EXPECT_EQ(alg.describe(alg.mul(el(alg, "3"), el(alg, "2"))), "5");
  EXPECT_TRUE(alg.is_zero(alg.mul(alg.zero(), el(alg, "4"))));
  EXPECT_EQ(alg.describe(alg.add(alg.zero(), el(alg, "4"))), "4");
  EXPECT_EQ(alg.describe(alg.one()), "0");
  EXPECT_EQ(alg.describe(alg.add(el(alg, "0"), el(alg, "0"))), "0");
}

TEST(NatPlusMin, Infinity) {
  NatPlusMin alg;
  const Weight inf = alg.one();
  EXPECT_EQ(alg.describe(inf), "inf");
  EXPECT_TRUE(alg.equal(alg.parse("∞"), inf));
  EXPECT_TRUE(alg.equal(alg.add(el(alg, "3"), inf), inf));
  EXPECT_EQ(alg.describe(alg.mul(el(alg, "3"), inf)), "3");
  EXPECT_EQ(alg.describe(alg.mul(el(alg, "3"), el(alg, "7"))), "3");
  EXPECT_EQ(alg.describe(alg.add(el(alg, "3"), el(alg, "7"))), "10");
  EXPECT_TRUE(alg.is_zero(alg.mul(alg.zero(), inf)));
  EXPECT_THROW(alg.elements(), EnumerationError);
  EXPECT_THROW(validate_axioms(alg), EnumerationError);
}

TEST(PolyMonome, PaperExample) {
  PolyMonome alg;
  const Weight x = el(alg, "x");
  const Weight one_plus_x = alg.add(el(alg, "1"), x);
  EXPECT_TRUE(alg.is_zero(alg.mul(x, one_plus_x)));
  EXPECT_EQ(alg.describe(alg.mul(el(alg, "1+x"), el(alg, "2x^2"))), "2x^2+2x^3");
  EXPECT_EQ(alg.describe(alg.mul(el(alg, "3+x"), el(alg, "1+x"))), "3+3x");
}

TEST(PolyMonome, UnitIsConstantOne) {
  PolyMonome alg;
  for (const char* p : {"0", "1", "x", "1+x", "2+x^3", "x+x^2"}) {
    const Weight w = el(alg, p);
    EXPECT_TRUE(alg.equal(alg.mul(w, alg.one()), w)) << p;
    EXPECT_TRUE(alg.equal(alg.mul(alg.one(), w), w)) << p;
  }
  // x is not a two-sided unit under the case split.
  EXPECT_FALSE(alg.equal(alg.mul(el(alg, "1+x"), el(alg, "x")), el(alg, "1+x")));
}

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<Natural> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return Polynomial(c);
}

TEST(PolyMonome, RandomAssociativityAndRightDistributivity) {
  PolyMonome alg;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Weight p = random_poly(rng);
    const Weight q = random_poly(rng);
    const Weight r = random_poly(rng);
    EXPECT_TRUE(alg.equal(alg.mul(alg.mul(p, q), r), alg.mul(p, alg.mul(q, r))));
    EXPECT_TRUE(alg.equal(alg.mul(alg.add(p, q), r), alg.add(alg.mul(p, r), alg.mul(q, r))));
  }
}

// Order relation of a lattice given as an explicit list of pairs x <= y.
using Leq = std::set<std::pair<std::string, std::string>>;

Leq reflexive(const std::vector<std::string>& names, Leq strict) {
  for (const auto& n : names) strict.insert({n, n});
  return strict;
}

void expect_lattice(const AlgebraPtr& alg, const std::vector<std::string>& names, const Leq& leq) {
  auto le = [&](const std::string& a, const std::string& b) { return leq.count({a, b}) > 0; };
  for (const auto& a : names) {
    for (const auto& b : names) {
      std::vector<std::string> upper;
      std::vector<std::string> lower;
      for (const auto& c : names) {
        if (le(a, c) && le(b, c)) upper.push_back(c);
        if (le(c, a) && le(c, b)) lower.push_back(c);
      }
      std::string join;
      std::string meet;
      for (const auto& u : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](const auto& v) { return le(u, v); })) join = u;
      }
      for (const auto& l : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](const auto& v) { return le(v, l); })) meet = l;
      }
      EXPECT_EQ(alg->describe(alg->add(el(*alg, a), el(*alg, b))), join) << a << " v " << b;
      EXPECT_EQ(alg->describe(alg->mul(el(*alg, a), el(*alg, b))), meet) << a << " ^ " << b;
    }
  }
}

TEST(Lattices, PentagonMatchesHasseDiagram) {
  const std::vector<std::string> names{"0", "p", "q", "r", "1"};
  const Leq leq = reflexive(names, {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"0", "1"}, {"p", "q"},
                                    {"p", "1"}, {"q", "1"}, {"r", "1"}});
  const AlgebraPtr alg = builtin("PentagonN5");
  EXPECT_EQ(testing::labels(*alg, alg->elements()), names);
  expect_lattice(alg, names, leq);
}

TEST(Lattices, HexagonMatchesHasseDiagram) {
  const std::vector<std::string> names{"0", "p", "q", "r", "s", "1"};
  Leq leq;
  for (const auto& x : names) leq.insert({"0", x}), leq.insert({x, "1"});
  leq.insert({"p", "q"});
  leq.insert({"r", "s"});
  const AlgebraPtr alg = builtin("hexagon");
  expect_lattice(alg, names, reflexive(names, leq));
}

TEST(Lattices, Diamond) {
  const std::vector<std::string> names{"0", "a", "b", "1"};
  Leq leq;
  for (const auto& x : names) leq.insert({"0", x}), leq.insert({x, "1"});
  expect_lattice(builtin("Diamond"), names, reflexive(names, leq));
}

TEST(Lattices, MakeLatticeRejectsNonLattice) {
  // Two incomparable maximal elements: no top.
  EXPECT_THROW(make_lattice("bad", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}), StructuralError);
}

TEST(B4, TablesFollowTheRules) {
  const AlgebraPtr alg = builtin("B4");
  auto add = [](int i, int j) {
    if (i == 0) return j;
    if (j == 0) return i;
    if (i == 1 && j == 1) return 1;
    return 3;
  };
  auto mul = [](int i, int j) {
    if (i == 0 || j == 0) return 0;
    if (i == 1) return j;
    if (j == 1) return i;
    if (i == 2 && j == 2) return 0;
    if (i == 3 && j == 3) return 3;
    return 2;
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Weight a = el(*alg, std::to_string(i));
      const Weight b = el(*alg, std::to_string(j));
      EXPECT_EQ(alg->describe(alg->add(a, b)), std::to_string(add(i, j)));
      EXPECT_EQ(alg->describe(alg->mul(a, b)), std::to_string(mul(i, j)));
    }
  }
  // (2 ⊕ 2) ⊗ 2 = 3 ⊗ 2 = 2 while 2 ⊗ 2 = 0.
  const Weight two = el(*alg, "2");
  EXPECT_EQ(alg->describe(alg->mul(alg->add(two, two), two)), "2");
  EXPECT_TRUE(alg->is_zero(alg->mul(two, two)));
}

TEST(B3prime, TablesFollowTheRules) {
  const AlgebraPtr alg = builtin("B3prime");
  const std::vector<std::string> n{"0'", "1'", "2'"};
  auto add = [](int i, int j) { return i == 0 ? j : j == 0 ? i : 2; };
  auto mul = [](int i, int j) {
    if (i == 0 || j == 0) return 0;
    if (i == 1) return j;
    if (j == 1) return i;
    return 0;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(alg->describe(alg->add(el(*alg, n[i]), el(*alg, n[j]))), n[add(i, j)]);
      EXPECT_EQ(alg->describe(alg->mul(el(*alg, n[i]), el(*alg, n[j]))), n[mul(i, j)]);
    }
  }
}

TEST(TruncFun, PointwiseOracle) {
  for (std::size_t m : {1u, 2u, 3u}) {
    const AlgebraPtr alg = make_trunc_fun(m);
    // Enumerate f: [0,m] -> [0,m] with f(0) = 0 directly.
    std::vector<std::vector<std::size_t>> fs{{0}};
    for (std::size_t c = 1; c <= m; ++c) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& f : fs) {
        for (std::size_t v = 0; v <= m; ++v) {
          auto g = f;
          g.push_back(v);
          next.push_back(g);
        }
      }
      fs = next;
    }
    auto label = [](const std::vector<std::size_t>& f) {
      std::string s = "[";
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
      return s + "]";
    };
    ASSERT_EQ(alg->elements().size(), fs.size());
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        std::vector<std::size_t> sum(m + 1);
        std::vector<std::size_t> comp(m + 1);
        for (std::size_t c = 0; c <= m; ++c) {
          sum[c] = std::min(m, f[c] + g[c]);
          comp[c] = f[g[c]];
        }
        EXPECT_EQ(alg->describe(alg->add(el(*alg, label(f)), el(*alg, label(g)))), label(sum));
        EXPECT_EQ(alg->describe(alg->mul(el(*alg, label(f)), el(*alg, label(g)))), label(comp));
      }
    }
  }
}

TEST(TruncFun, GExample) {
  const AlgebraPtr alg = builtin("TruncFun(2)");
  const Weight g = el(*alg, "[0,1,0]");
  EXPECT_TRUE(alg->is_zero(alg->mul(g, alg->add(g, g))));
  EXPECT_TRUE(alg->equal(alg->mul(g, g), g));
  EXPECT_EQ(alg->describe(alg->one()), "[0,1,2]");
  EXPECT_EQ(alg->describe(alg->zero()), "[0,0,0]");
}

TEST(TruncFun, RightDistributiveExhaustive) {
  for (std::size_t m : {1u, 2u}) {
    const AlgebraPtr alg = make_trunc_fun(m);
    for (const auto& f : alg->elements())
      for (const auto& g : alg->elements())
        for (const auto& h : alg->elements()) {
          EXPECT_TRUE(alg->equal(alg->mul(alg->add(f, g), h),
                                 alg->add(alg->mul(f, h), alg->mul(g, h))));
        }
  }
}

TEST(Elements, Counts) {
  EXPECT_EQ(builtin("Boole")->elements().size(), 2u);
  EXPECT_EQ(builtin("PentagonN5")->elements().size(), 5u);
  EXPECT_EQ(builtin("Hexagon")->elements().size(), 6u);
  EXPECT_EQ(builtin("TruncFun(2)")->elements().size(), 9u);
  EXPECT_EQ(builtin("TruncFun(3)")->elements().size(), 64u);
  EXPECT_EQ(testing::labels(*builtin("Boole"), builtin("Boole")->elements()),
            (std::vector<std::string>{"0", "1"}));
}

TEST(Builtin, LookupAndErrors) {
  EXPECT_EQ(builtin("pentagon")->name(), "PentagonN5");
  EXPECT_EQ(builtin("BOOLE")->name(), "Boole");
  EXPECT_EQ(builtin("truncfun")->name(), "TruncFun(2)");
  EXPECT_EQ(builtin("TruncFun(1)")->elements().size(), 2u);
  try {
    builtin("Pentagram");
    FAIL();
  } catch (const LookupError& e) {
    EXPECT_NE(std::string(e.what()).find("PentagonN5"), std::string::npos);
  }
  EXPECT_THROW(builtin("TruncFun(0)"), LookupError);
  EXPECT_THROW(builtin("TruncFun(x)"), LookupError);
}

TEST(Axioms, BundledAlgebrasPass) {
  for (const auto& alg : bundled_finite_algebras()) {
    const ValidationReport r = validate_axioms(*alg);
    EXPECT_TRUE(r.passed()) << alg->name() << "\n" << r.summary(*alg);
  }
}

TEST(Axioms, MutatedB4FailsAssociativity) {
  OperationTables t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("B4")).tables();
  t.add[2][3] = 1;
  const ValidationReport r = validate_axioms(t);
  EXPECT_FALSE(r.passed());
  const AxiomResult* assoc = r.find(Axiom::AddAssociative);
  ASSERT_NE(assoc, nullptr);
  EXPECT_FALSE(assoc->holds);
  ASSERT_EQ(assoc->witness.size(), 3u);
  // The witness really violates associativity.
  FiniteTableAlgebra alg("mutated", t);
  const auto& w = assoc->witness;
  EXPECT_FALSE(alg.equal(alg.add(alg.add(w[0], w[1]), w[2]), alg.add(w[0], alg.add(w[1], w[2]))));
}

TEST(Axioms, NonAnnihilatingZero) {
  OperationTables t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("Boole")).tables();
  t.mul[0][1] = 1;
  t.mul[1][0] = 1;
  const ValidationReport r = validate_axioms(t);
  EXPECT_FALSE(r.find(Axiom::ZeroAnnihilates)->holds);
}

TEST(Axioms, StructuralErrorsAreDistinct) {
  OperationTables t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("Boole")).tables();
  t.add[0][1] = 5;
  EXPECT_THROW(validate_axioms(t), StructuralError);
  t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("Boole")).tables();
  t.mul.pop_back();
  EXPECT_THROW(check_structure(t), StructuralError);
  t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("Boole")).tables();
  t.names[1] = "0";
  EXPECT_THROW(check_structure(t), StructuralError);
  EXPECT_THROW(check_structure(OperationTables{}), StructuralError);
}

TEST(Counting, CountsAndTransparency) {
  const AlgebraPtr inner = builtin("PentagonN5");
  auto counted = wrap_counting(inner);
  const Weight p = el(*inner, "p");
  const Weight r = el(*inner, "r");
  counted->add(p, r);
  EXPECT_EQ(counted->read_counts(), (OpCounts{1, 0}));
  counted->reset_counts();
  counted->mul(counted->add(p, r), p);
  EXPECT_EQ(counted->read_counts(), (OpCounts{1, 1}));
  for (const auto& a : inner->elements()) {
    for (const auto& b : inner->elements()) {
      EXPECT_EQ(counted->add(a, b), inner->add(a, b));
      EXPECT_EQ(counted->mul(a, b), inner->mul(a, b));
    }
  }
  counted->reset_counts();
  EXPECT_EQ(counted->read_counts(), (OpCounts{0, 0}));
}

TEST(WeightSet, DeduplicatesByAlgebraEquality) {
  const AlgebraPtr alg = builtin("Boole");
  WeightSet s(*alg);
  EXPECT_TRUE(s.insert(alg->one()));
  EXPECT_FALSE(s.insert(alg->one()));
  EXPECT_TRUE(s.insert(alg->zero()));
  WeightSet t(*alg);
  t.insert(alg->zero());
  t.insert(alg->one());
  EXPECT_TRUE(s.same_elements(t));
}

TEST(Folds, EmptySumAndProduct) {
  const AlgebraPtr alg = builtin("B4");
  EXPECT_TRUE(alg->is_zero(sum(*alg, {})));
  EXPECT_TRUE(alg->equal(product(*alg, {}), alg->one()));
}

}  // namespace
}  // namespace sbwa
