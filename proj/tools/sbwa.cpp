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

// sbwa: evaluate weighted word/tree automata over strong bimonoids and run
// the property checks and theorem harness from the command line.
//
// Exit codes: 0 success, 1 unexpected counterexample, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbwa/bridge.hpp"
#include "sbwa/builtin.hpp"
#include "sbwa/error.hpp"
#include "sbwa/harness.hpp"
#include "sbwa/io.hpp"

namespace {

using namespace sbwa;

constexpr int kUsageError = 2;

struct Common {
  std::string format = "table";
  bool allow_invalid = false;

  LoadOptions load() const { return LoadOptions{allow_invalid}; }
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

void add_allow_invalid(CLI::App* cmd, Common& common) {
  cmd->add_flag("--allow-invalid", common.allow_invalid,
                "Load algebra tables even if they fail the axiom check");
}

AnyInput parse_input(const AnyAutomaton& a, const std::string& text) {
  if (const auto* w = std::get_if<WordAutomaton>(&a)) return parse_word(text, w->alphabet());
  return parse_tree(text, std::get<TreeAutomaton>(a).alphabet());
}

std::string input_text(const AnyInput& in) {
  if (const auto* w = std::get_if<Word>(&in)) return format_word(*w);
  return to_string(std::get<Tree>(in));
}

Weight evaluate_any(const AnyAutomaton& a, const AnyInput& in, Semantics s, EvalOptions opts) {
  if (const auto* w = std::get_if<WordAutomaton>(&a)) {
    return evaluate(*w, std::get<Word>(in), s, opts);
  }
  return evaluate(std::get<TreeAutomaton>(a), std::get<Tree>(in), s, opts);
}

const Algebra& algebra_of(const AnyAutomaton& a) {
  return std::visit([](const auto& x) -> const Algebra& { return x.alg(); }, a);
}

std::vector<AnyInput> inputs_up_to(const AnyAutomaton& a, std::size_t bound) {
  std::vector<AnyInput> out;
  if (const auto* w = std::get_if<WordAutomaton>(&a)) {
    for (auto& word : enumerate_words(w->alphabet(), bound)) out.emplace_back(std::move(word));
  } else {
    for (auto& t : enumerate_trees(std::get<TreeAutomaton>(a).alphabet(), bound)) {
      out.emplace_back(std::move(t));
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument(path + ": cannot write file");
  out << text << '\n';
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  Common common;
  std::string automaton;
  std::string input;
  std::string semantics = "both";
  bool prune = false;
};

int run_eval(const EvalArgs& args) {
  const AnyAutomaton a = load_automaton(args.automaton, args.common.load());
  const AnyInput in = parse_input(a, args.input);
  const Algebra& alg = algebra_of(a);
  const EvalOptions opts{args.prune};
  if (args.semantics != "both") {
    const Weight v = evaluate_any(a, in, parse_semantics(args.semantics), opts);
    if (args.common.json()) {
      nlohmann::ordered_json j{{"input", input_text(in)},
                               {args.semantics, alg.describe(v)}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << alg.describe(v) << '\n';
    }
    return 0;
  }
  const Weight run = evaluate_any(a, in, Semantics::Run, opts);
  const Weight init = evaluate_any(a, in, Semantics::Init, opts);
  if (args.common.json()) {
    nlohmann::ordered_json j{{"input", input_text(in)},
                             {"run", alg.describe(run)},
                             {"init", alg.describe(init)},
                             {"equal", alg.equal(run, init)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "run:  " << alg.describe(run) << '\n'
              << "init: " << alg.describe(init) << '\n';
  }
  return 0;
}

// --- support ----------------------------------------------------------------

struct SupportArgs {
  Common common;
  std::string automaton;
  std::string input;
  std::size_t bound = 4;
};

int run_support(const SupportArgs& args) {
  const AnyAutomaton a = load_automaton(args.automaton, args.common.load());
  const Algebra& alg = algebra_of(a);
  const EvalOptions opts{true};
  std::vector<AnyInput> inputs;
  if (!args.input.empty()) {
    inputs.push_back(parse_input(a, args.input));
  } else {
    inputs = inputs_up_to(a, args.bound);
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<std::string> run_only;
  std::vector<std::string> init_only;
  std::ostringstream table;
  for (const auto& in : inputs) {
    const bool run = !alg.is_zero(evaluate_any(a, in, Semantics::Run, opts));
    const bool init = !alg.is_zero(evaluate_any(a, in, Semantics::Init, opts));
    const std::string text = input_text(in);
    if (run && !init) run_only.push_back(text);
    if (init && !run) init_only.push_back(text);
    if (!run && !init && args.input.empty()) continue;
    rows.push_back({{"input", text}, {"run", run}, {"init", init}});
    table << "  " << text << "  run=" << (run ? "yes" : "no") << " init=" << (init ? "yes" : "no")
          << (run != init ? "  <- differs" : "") << '\n';
  }
  const bool equal = run_only.empty() && init_only.empty();
  if (args.common.json()) {
    nlohmann::ordered_json j{{"inputs_checked", inputs.size()},
                             {"support", rows},
                             {"run_only", run_only},
                             {"init_only", init_only},
                             {"supports_equal", equal}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "inputs checked: " << inputs.size() << '\n'
              << table.str() << "supports equal: " << (equal ? "yes" : "no") << '\n';
  }
  return 0;
}

// --- props ------------------------------------------------------------------

struct PropsArgs {
  Common common;
  std::string algebra;
  bool axioms = false;
};

int run_props(const PropsArgs& args) {
  const AlgebraPtr alg = resolve_algebra(args.algebra, args.common.load());
  if (args.axioms) {
    const ValidationReport r = validate_axioms(*alg);
    if (args.common.json()) {
      std::cout << report_to_json(r, *alg) << '\n';
    } else {
      std::cout << r.summary(*alg);
    }
    return 0;
  }
  const PropertyReport r = classify(*alg);
  std::cout << (args.common.json() ? report_to_json(r, *alg) + "\n" : report_to_table(r, *alg));
  return 0;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string theorem;
  TheoremCheckConfig config;
  std::string alphabet;
};

int run_check(CheckArgs args) {
  const AlgebraPtr alg = resolve_algebra(args.config.algebra, args.common.load());
  const bool trees = args.theorem == "supports-trees" || args.theorem == "image-trees";
  if (!args.alphabet.empty()) {
    if (trees) {
      args.config.tree_alphabet = RankedAlphabet::parse(args.alphabet);
    } else {
      args.config.word_alphabet.clear();
      std::stringstream ss(args.alphabet);
      for (std::string letter; std::getline(ss, letter, ',');) {
        if (!letter.empty()) args.config.word_alphabet.push_back(letter);
      }
    }
  }
  args.config.validate();

  CheckReport report;
  if (args.theorem == "supports-words") {
    report = check_support_theorem_words(alg, args.config);
  } else if (args.theorem == "supports-trees") {
    report = check_support_theorem_trees(alg, args.config);
  } else if (args.theorem == "image-words") {
    report = check_image_theorem(alg, ImageMode::Words, args.config);
  } else {
    report = check_image_theorem(alg, ImageMode::Trees, args.config);
  }
  std::cout << (args.common.json() ? report_to_json(report) + "\n" : report_to_table(report));
  return report.exit_code();
}

// --- convert ----------------------------------------------------------------

struct ConvertArgs {
  std::string direction;
  std::string input;
  std::string output;
  std::string end_marker = "e";
  Common common;
};

int run_convert(const ConvertArgs& args) {
  const AnyAutomaton a = load_automaton(args.input, args.common.load());
  if (args.direction == "word-to-tree") {
    const auto* w = std::get_if<WordAutomaton>(&a);
    if (w == nullptr) throw ParseError(args.input + ": expected a word automaton");
    write_text(args.output, automaton_to_json(wsa_to_wta(*w, args.end_marker)));
  } else {
    const auto* t = std::get_if<TreeAutomaton>(&a);
    if (t == nullptr) throw ParseError(args.input + ": expected a tree automaton");
    const auto& alphabet = t->alphabet();
    const auto nullary = alphabet.of_rank(0);
    if (nullary.size() != 1 || nullary.front() != args.end_marker) {
      throw InvalidArgument(args.input + ": end marker '" + args.end_marker +
                            "' is not the only nullary symbol");
    }
    write_text(args.output, automaton_to_json(string_wta_to_wsa(*t)));
  }
  return 0;
}

// --- profile ----------------------------------------------------------------

struct ProfileArgs {
  Common common;
  std::string automaton;
  std::string input;
};

int run_profile(const ProfileArgs& args) {
  const AnyAutomaton a = load_automaton(args.automaton, args.common.load());
  const AnyInput in = parse_input(a, args.input);
  CostProfile p;
  if (const auto* w = std::get_if<WordAutomaton>(&a)) {
    p = cost_profile(*w, std::get<Word>(in));
  } else {
    p = cost_profile(std::get<TreeAutomaton>(a), std::get<Tree>(in));
  }
  const Algebra& alg = algebra_of(a);
  std::cout << (args.common.json() ? report_to_json(p, alg) + "\n" : report_to_table(p, alg));
  return 0;
}

// --- image ------------------------------------------------------------------

struct ImageArgs {
  Common common;
  std::string automaton;
  std::size_t bound = 4;
};

int run_image(const ImageArgs& args) {
  const AnyAutomaton a = load_automaton(args.automaton, args.common.load());
  const EvalOptions opts{true};
  const ImagePair images = std::visit(
      [&](const auto& x) { return image_up_to(x, args.bound, opts); }, a);
  const Algebra& alg = algebra_of(a);
  auto labels = [&](const WeightSet& s) { return describe_all(alg, s.items()); };
  if (args.common.json()) {
    nlohmann::ordered_json j{{"bound", args.bound},
                             {"run", labels(images.run)},
                             {"init", labels(images.init)},
                             {"equal", images.agree()}};
    std::cout << j.dump(2) << '\n';
  } else {
    auto join = [](const std::vector<std::string>& xs) {
      std::string s = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
      return s + "}";
    };
    std::cout << "run image:  " << join(labels(images.run)) << '\n'
              << "init image: " << join(labels(images.init)) << '\n'
              << "equal: " << (images.agree() ? "yes" : "no") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted word and tree automata over strong bimonoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sbwa 0.1.0");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an automaton on one input");
  eval_cmd->add_option("-a,--automaton", eval.automaton, "Automaton file")->required();
  eval_cmd->add_option("-i,--input", eval.input, "Word or tree term")->required();
  eval_cmd->add_option("-s,--semantics", eval.semantics, "run, init or both")
      ->check(CLI::IsMember({"run", "init", "both"}))
      ->capture_default_str();
  eval_cmd->add_flag("--prune", eval.prune, "Skip runs with a zero factor");
  add_format(eval_cmd, eval.common);
  add_allow_invalid(eval_cmd, eval.common);

  SupportArgs support;
  auto* support_cmd =
      app.add_subcommand("support", "Support membership under both semantics");
  support_cmd->add_option("-a,--automaton", support.automaton, "Automaton file")->required();
  support_cmd->add_option("-i,--input", support.input,
                          "Single input; otherwise all inputs up to --bound");
  support_cmd->add_option("-b,--bound", support.bound, "Max word length or tree size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(support_cmd, support.common);
  add_allow_invalid(support_cmd, support.common);

  PropsArgs props;
  auto* props_cmd = app.add_subcommand("props", "Classify a finite algebra");
  props_cmd->add_option("--algebra", props.algebra, "Builtin name or table file")->required();
  props_cmd->add_flag("--axioms", props.axioms, "Report the strong bimonoid axioms instead");
  add_format(props_cmd, props.common);
  add_allow_invalid(props_cmd, props.common);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a theorem check");
  check_cmd->add_option("theorem", check.theorem, "Which check")
      ->required()
      ->check(CLI::IsMember({"supports-words", "supports-trees", "image-words", "image-trees"}));
  check_cmd->add_option("--algebra", check.config.algebra, "Builtin name or table file")
      ->capture_default_str();
  check_cmd->add_option("--seed", check.config.seed, "Random seed")->capture_default_str();
  check_cmd->add_option("--automata", check.config.num_automata, "Random automata to try")
      ->capture_default_str();
  check_cmd->add_option("--max-states", check.config.max_states, "State bound")
      ->capture_default_str();
  check_cmd->add_option("--max-length", check.config.max_word_length, "Word length bound")
      ->capture_default_str();
  check_cmd->add_option("--max-size", check.config.max_tree_size, "Tree size bound")
      ->capture_default_str();
  check_cmd->add_option("--zero-bias", check.config.zero_bias,
                        "Probability of drawing zero for a weight")
      ->capture_default_str();
  check_cmd->add_option("--alphabet", check.alphabet,
                        "Letters \"x,y\" or ranked symbols \"alpha:0,sigma:2\"");
  add_format(check_cmd, check.common);
  add_allow_invalid(check_cmd, check.common);

  ConvertArgs convert;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert between word and string tree automata");
  convert_cmd->add_option("--direction", convert.direction, "Conversion direction")
      ->required()
      ->check(CLI::IsMember({"word-to-tree", "tree-to-word"}));
  convert_cmd->add_option("-i,--input", convert.input, "Automaton file")->required();
  convert_cmd->add_option("-o,--output", convert.output, "Output file (default stdout)");
  convert_cmd->add_option("--end-marker", convert.end_marker, "Nullary end symbol")
      ->capture_default_str();
  add_allow_invalid(convert_cmd, convert.common);

  ProfileArgs profile;
  auto* profile_cmd =
      app.add_subcommand("profile", "Count algebra operations of both semantics");
  profile_cmd->add_option("-a,--automaton", profile.automaton, "Automaton file")->required();
  profile_cmd->add_option("-i,--input", profile.input, "Word or tree term")->required();
  add_format(profile_cmd, profile.common);
  add_allow_invalid(profile_cmd, profile.common);

  ImageArgs image;
  auto* image_cmd = app.add_subcommand("image", "Images of both semantics up to a bound");
  image_cmd->add_option("-a,--automaton", image.automaton, "Automaton file")->required();
  image_cmd->add_option("-b,--bound", image.bound, "Max word length or tree size")
      ->capture_default_str();
  add_format(image_cmd, image.common);
  add_allow_invalid(image_cmd, image.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*support_cmd) return run_support(support);
    if (*props_cmd) return run_props(props);
    if (*check_cmd) return run_check(check);
    if (*convert_cmd) return run_convert(convert);
    if (*profile_cmd) return run_profile(profile);
    if (*image_cmd) return run_image(image);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
