#include <gtest/gtest.h>

#include "json.hpp"
#include "sbwa/builtin.hpp"
#include "sbwa/error.hpp"
#include "sbwa/io.hpp"
#include "sbwa/random.hpp"
#include "test_util.hpp"

namespace sbwa {
namespace {

std::string data(const std::string& name) { return std::string(SBWA_TEST_DATA) + "/" + name; }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Io, LoadsWordAutomaton) {
  const auto any = load_automaton(data("special_b4.json"));
  const auto& a = std::get<WordAutomaton>(any);
  EXPECT_EQ(a.alg().name(), "B4");
  EXPECT_TRUE(a.alg().is_zero(run_semantics(a, {"gamma"})));
  EXPECT_EQ(a.alg().describe(initial_semantics(a, {"gamma"})), "2");
  const AlgebraPtr b4 = builtin("B4");
  const Weight two = b4->parse("2");
  EXPECT_TRUE(a.structurally_equal(special_automaton(b4, two, two, two, "gamma", {"gamma"})));
}

TEST(Io, LoadsTreeAutomaton) {
  const auto any = load_automaton(data("truncfun_branching.json"));
  const auto& a = std::get<TreeAutomaton>(any);
  const AlgebraPtr tf = builtin("TruncFun(2)");
  const Weight g = tf->parse("[0,1,0]");
  EXPECT_TRUE(a.structurally_equal(branching_example_automaton(tf, g, g, g, tf->one(), 2)));
}

TEST(Io, InlineTable) {
  const auto any = load_automaton(data("inline_table.json"));
  const auto& a = std::get<WordAutomaton>(any);
  EXPECT_EQ(a.alg().describe(run_semantics(a, {"a", "a"})), "1");
}

TEST(Io, WordRoundTrip) {
  Rng rng(109);
  for (const auto& alg : bundled_finite_algebras()) {
    const auto a = random_word_automaton(alg, {"x", "yy"}, 3, rng);
    const auto back = std::get<WordAutomaton>(parse_automaton(automaton_to_json(a), "memory"));
    EXPECT_TRUE(back.structurally_equal(a)) << alg->name();
  }
}

TEST(Io, TreeRoundTrip) {
  Rng rng(113);
  const RankedAlphabet sigma({{"sigma", 2}, {"alpha", 0}, {"gamma", 1}});
  for (const auto& alg : bundled_finite_algebras()) {
    const auto a = random_tree_automaton(alg, sigma, 2, rng);
    const auto back = std::get<TreeAutomaton>(parse_automaton(automaton_to_json(a), "memory"));
    EXPECT_TRUE(back.structurally_equal(a)) << alg->name();
    // Symbol order survives serialization.
    EXPECT_EQ(back.alphabet(), sigma);
  }
}

TEST(Io, CustomTableRoundTrip) {
  const AlgebraPtr chain = load_table_algebra(data("chain3.json"));
  EXPECT_EQ(chain->name(), "chain3");
  const auto& table = dynamic_cast<const FiniteTableAlgebra&>(*chain);
  const AlgebraPtr again = parse_table_algebra(tables_to_json(table), "again.json");
  EXPECT_EQ(dynamic_cast<const FiniteTableAlgebra&>(*again).tables().mul, table.tables().mul);
  EXPECT_EQ(again->name(), "chain3");

  Rng rng(127);
  const auto a = random_word_automaton(chain, {"x"}, 2, rng);
  const auto back = std::get<WordAutomaton>(parse_automaton(automaton_to_json(a), "memory"));
  EXPECT_TRUE(back.structurally_equal(a));
}

TEST(Io, TablesWithBuiltinNamesAreInlinedUnlessIdentical) {
  OperationTables t = dynamic_cast<const FiniteTableAlgebra&>(*builtin("Boole")).tables();
  t.add[1][1] = 0;
  auto fake = std::make_shared<FiniteTableAlgebra>("Boole", t);
  WordAutomaton a(fake, {"x"}, {"q"});
  const auto j = nlohmann::json::parse(automaton_to_json(a));
  EXPECT_TRUE(j["algebra"].is_object());
  WordAutomaton b(builtin("Boole"), {"x"}, {"q"});
  EXPECT_EQ(nlohmann::json::parse(automaton_to_json(b))["algebra"], "Boole");
}

TEST(Io, InvalidTableRefusedUnlessAllowed) {
  const std::string msg = error_of([] { load_table_algebra(data("nonassoc.json")); });
  EXPECT_NE(msg.find("nonassoc.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("--allow-invalid"), std::string::npos) << msg;
  EXPECT_NO_THROW(load_table_algebra(data("nonassoc.json"), LoadOptions{true}));
}

TEST(Io, ErrorsNameFileAndLocation) {
  const std::string bad_state = error_of([] { load_automaton(data("bad_state.json")); });
  EXPECT_NE(bad_state.find("bad_state.json: /transitions/1/to"), std::string::npos) << bad_state;
  EXPECT_NE(bad_state.find("'t'"), std::string::npos);

  const std::string malformed = error_of([] { load_automaton(data("malformed.json")); });
  EXPECT_NE(malformed.find("malformed.json:4:"), std::string::npos) << malformed;

  const std::string missing = error_of([] { load_automaton(data("nope.json")); });
  EXPECT_NE(missing.find("nope.json"), std::string::npos);

  const std::string weight = error_of([] {
    parse_automaton(R"({"algebra":"B4","alphabet":["x"],"states":["q"],"final":{"q":"7"}})",
                    "inline");
  });
  EXPECT_NE(weight.find("inline: /final/q"), std::string::npos) << weight;

  const std::string algebra = error_of([] {
    parse_automaton(R"({"algebra":"Nope","alphabet":["x"],"states":["q"]})", "inline");
  });
  EXPECT_NE(algebra.find("/algebra"), std::string::npos) << algebra;

  const std::string rank = error_of([] {
    parse_automaton(R"({"algebra":"Boole","alphabet":{"alpha":0,"sigma":2},"states":["q"],
        "transitions":[{"children":["q"],"symbol":"sigma","to":"q","weight":"1"}]})",
                    "inline");
  });
  EXPECT_NE(rank.find("/transitions/0/children"), std::string::npos) << rank;

  const std::string dup = error_of([] {
    parse_automaton(R"({"algebra":"Boole","alphabet":["x"],"states":["q"],"transitions":[
        {"from":"q","symbol":"x","to":"q","weight":"1"},
        {"from":"q","symbol":"x","to":"q","weight":"0"}]})",
                    "inline");
  });
  EXPECT_NE(dup.find("duplicate"), std::string::npos) << dup;

  const std::string table = error_of([] {
    parse_tables(R"({"names":["0","1"],"add":[["0","1"]],"mul":[],"zero":"0","one":"1"})", "t");
  });
  EXPECT_NE(table.find("t: /add"), std::string::npos) << table;
}

TEST(Io, ResolveAlgebra) {
  EXPECT_EQ(resolve_algebra("hexagon")->name(), "Hexagon");
  EXPECT_EQ(resolve_algebra(data("chain3.json"))->name(), "chain3");
  EXPECT_THROW(resolve_algebra("no-such-algebra"), LookupError);
}

TEST(Io, ReportsAreJson) {
  const AlgebraPtr b4 = builtin("B4");
  const auto props = nlohmann::json::parse(report_to_json(classify(*b4), *b4));
  EXPECT_EQ(props["properties"]["StronglyZSF"]["holds"], false);
  EXPECT_EQ(props["properties"]["StronglyZSF"]["witness"], nlohmann::json({"2", "2", "2"}));
  EXPECT_EQ(props["halves"]["RunToInit"]["holds"], true);
  EXPECT_TRUE(props["halves"]["RunToInit"]["witness"].is_null());

  const auto axioms = nlohmann::json::parse(report_to_json(validate_axioms(*b4), *b4));
  EXPECT_EQ(axioms["passed"], true);

  TheoremCheckConfig c;
  c.num_automata = 5;
  const auto check = nlohmann::json::parse(report_to_json(check_support_theorem_words(b4, c)));
  EXPECT_EQ(check["verdict"], "predicted-counterexample");
  EXPECT_EQ(check["counterexamples"][0]["run"], "0");
  EXPECT_EQ(check["counterexamples"][0]["init"], "2");
  EXPECT_EQ(check["counterexamples"][0]["input"], "x");
  EXPECT_EQ(check["counterexamples"][0]["revalidated"], true);

  const auto a = std::get<WordAutomaton>(load_automaton(data("three_state.json")));
  const auto cost = nlohmann::json::parse(report_to_json(cost_profile(a, Word(4, "x")), a.alg()));
  EXPECT_EQ(cost["rows"][0]["muls"], 1215);
  EXPECT_EQ(cost["rows"][1]["muls"], 39);
}

TEST(Io, TablesRender) {
  const AlgebraPtr alg = builtin("PentagonN5");
  const std::string table = report_to_table(classify(*alg), *alg);
  EXPECT_NE(table.find("RightDistributive"), std::string::npos);
  EXPECT_NE(table.find("witness (p, r, q)"), std::string::npos) << table;
}

}  // namespace
}  // namespace sbwa
