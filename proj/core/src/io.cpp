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

#include "sbwa/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "sbwa/builtin.hpp"
#include "sbwa/error.hpp"

namespace sbwa {

namespace {

using Json = nlohmann::ordered_json;

// Location inside a JSON document, for error messages ("/transitions/3/to").
class Where {
 public:
  Where(std::string source, std::string path = "")
      : source_(std::move(source)), path_(std::move(path)) {}

  Where operator/(const std::string& key) const { return Where(source_, path_ + "/" + key); }
  Where operator/(std::size_t i) const { return *this / std::to_string(i); }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(source_ + ": " + (path_.empty() ? "/" : path_) + ": " + why);
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::string path_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON (" + e.what() + ")");
  }
}

const Json& member(const Json& obj, const char* key, const Where& at) {
  if (!obj.is_object()) at.fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) at.fail(std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const Where& at) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned() || j.is_number_integer()) return j.dump();
  at.fail("expected a string");
}

std::vector<std::string> string_array(const Json& j, const Where& at) {
  if (!j.is_array()) at.fail("expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], at / i));
  return out;
}

OperationTables tables_from(const Json& j, const Where& at) {
  OperationTables t;
  t.names = string_array(member(j, "names", at), at / "names");
  if (t.names.empty()) (at / "names").fail("carrier is empty");
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (t.names[k] == t.names[i]) (at / "names" / i).fail("duplicate name '" + t.names[i] + "'");
    }
  }
  auto index = [&](const Json& v, const Where& w) {
    const std::string name = as_string(v, w);
    auto it = std::find(t.names.begin(), t.names.end(), name);
    if (it == t.names.end()) w.fail("'" + name + "' is not a declared element");
    return static_cast<std::size_t>(it - t.names.begin());
  };
  const std::size_t n = t.names.size();
  auto table = [&](const char* key) {
    const Where w = at / key;
    const Json& rows = member(j, key, at);
    if (!rows.is_array() || rows.size() != n) {
      w.fail("expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Json& row = rows[r];
      if (!row.is_array() || row.size() != n) {
        (w / r).fail("expected " + std::to_string(n) + " entries");
      }
      for (std::size_t c = 0; c < n; ++c) out[r].push_back(index(row[c], w / r / c));
    }
    return out;
  };
  t.add = table("add");
  t.mul = table("mul");
  t.zero = index(member(j, "zero", at), at / "zero");
  t.one = index(member(j, "one", at), at / "one");
  return t;
}

std::string stem_of(const std::string& source) {
  std::string stem = std::filesystem::path(source).stem().string();
  return stem.empty() ? "table" : stem;
}

AlgebraPtr table_algebra_from(const Json& j, const Where& at, const std::string& fallback_name,
                              LoadOptions opts) {
  OperationTables t = tables_from(j, at);
  std::string name = fallback_name;
  if (j.contains("name")) name = as_string(j["name"], at / "name");
  auto alg = std::make_shared<FiniteTableAlgebra>(name, std::move(t));
  if (!opts.allow_invalid) {
    const ValidationReport report = validate_axioms(*alg);
    if (!report.passed()) {
      std::string failed;
      for (const auto& r : report.results) {
        if (r.holds) continue;
        failed += (failed.empty() ? "" : "; ") + axiom_name(r.axiom) + " fails at (";
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
          failed += (i ? ", " : "") + alg->describe(r.witness[i]);
        }
        failed += ")";
      }
      at.fail("table is not a strong bimonoid: " + failed +
              " (pass --allow-invalid to load it anyway)");
    }
  }
  return alg;
}

Weight element(const Algebra& alg, const Json& j, const Where& at) {
  const std::string label = as_string(j, at);
  try {
    return alg.parse(label);
  } catch (const Error& e) {
    at.fail(e.what());
  }
}

std::size_t state_of(const std::vector<std::string>& states, const Json& j, const Where& at) {
  const std::string name = as_string(j, at);
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) at.fail("unknown state '" + name + "'");
  return static_cast<std::size_t>(it - states.begin());
}

template <class Setter>
void read_state_map(const Json& doc, const char* key, const std::vector<std::string>& states,
                    const Algebra& alg, const Where& at, Setter set) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  const Where w = at / key;
  if (!it->is_object()) w.fail("expected an object mapping states to weights");
  for (const auto& [state, weight] : it->items()) {
    const Where ws = w / state;
    set(state_of(states, Json(state), ws), element(alg, weight, ws));
  }
}

AnyAutomaton automaton_from(const Json& doc, const Where& at, LoadOptions opts) {
  if (!doc.is_object()) at.fail("expected an object");
  const Json& alg_json = member(doc, "algebra", at);
  AlgebraPtr alg;
  if (alg_json.is_object()) {
    alg = table_algebra_from(alg_json, at / "algebra", "inline", opts);
  } else {
    const std::string name = as_string(alg_json, at / "algebra");
    try {
      alg = builtin(name);
    } catch (const LookupError& e) {
      (at / "algebra").fail(e.what());
    }
  }
  const std::vector<std::string> states =
      string_array(member(doc, "states", at), at / "states");
  const Json& alphabet = member(doc, "alphabet", at);

  if (alphabet.is_array()) {
    std::vector<std::string> letters = string_array(alphabet, at / "alphabet");
    std::optional<WordAutomaton> a;
    try {
      a.emplace(alg, letters, states);
    } catch (const InvalidArgument& e) {
      at.fail(e.what());
    }
    read_state_map(doc, "initial", states, *alg, at,
                   [&](std::size_t q, Weight w) { a->set_initial(q, std::move(w)); });
    read_state_map(doc, "final", states, *alg, at,
                   [&](std::size_t q, Weight w) { a->set_final(q, std::move(w)); });
    if (doc.contains("transitions")) {
      const Where wt = at / "transitions";
      const Json& list = doc["transitions"];
      if (!list.is_array()) wt.fail("expected an array");
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Where we = wt / i;
        const Json& e = list[i];
        const std::size_t from = state_of(states, member(e, "from", we), we / "from");
        const std::size_t to = state_of(states, member(e, "to", we), we / "to");
        const std::string sym = as_string(member(e, "symbol", we), we / "symbol");
        if (!a->has_symbol(sym)) (we / "symbol").fail("unknown symbol '" + sym + "'");
        const std::size_t s = a->symbol_index(sym);
        if (std::find(seen.begin(), seen.end(), std::tuple(s, from, to)) != seen.end()) {
          we.fail("duplicate transition");
        }
        seen.emplace_back(s, from, to);
        a->set_transition(s, from, to, element(*alg, member(e, "weight", we), we / "weight"));
      }
    }
    return std::move(*a);
  }

  if (!alphabet.is_object()) (at / "alphabet").fail("expected an array or an object");
  std::vector<std::pair<std::string, std::size_t>> symbols;
  for (const auto& [name, rank] : alphabet.items()) {
    if (!rank.is_number_unsigned()) (at / "alphabet" / name).fail("rank must be a natural number");
    symbols.emplace_back(name, rank.get<std::size_t>());
  }
  std::optional<TreeAutomaton> a;
  try {
    a.emplace(alg, RankedAlphabet(std::move(symbols)), states);
  } catch (const InvalidArgument& e) {
    (at / "alphabet").fail(e.what());
  }
  if (doc.contains("initial")) {
    (at / "initial").fail("tree automata have no initial weights; use nullary transitions");
  }
  read_state_map(doc, "final", states, *alg, at,
                 [&](std::size_t q, Weight w) { a->set_root_weight(q, std::move(w)); });
  if (doc.contains("transitions")) {
    const Where wt = at / "transitions";
    const Json& list = doc["transitions"];
    if (!list.is_array()) wt.fail("expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Where we = wt / i;
      const Json& e = list[i];
      const std::string sym = as_string(member(e, "symbol", we), we / "symbol");
      const auto id = a->alphabet().find(sym);
      if (!id) (we / "symbol").fail("unknown symbol '" + sym + "'");
      std::vector<std::size_t> children;
      if (e.contains("children")) {
        const Json& cs = e["children"];
        if (!cs.is_array()) (we / "children").fail("expected an array");
        for (std::size_t c = 0; c < cs.size(); ++c) {
          children.push_back(state_of(states, cs[c], we / "children" / c));
        }
      }
      if (children.size() != a->alphabet().rank(*id)) {
        (we / "children").fail("symbol '" + sym + "' has rank " +
                               std::to_string(a->alphabet().rank(*id)) + " but " +
                               std::to_string(children.size()) + " child states are given");
      }
      const std::size_t to = state_of(states, member(e, "to", we), we / "to");
      a->set_transition(*id, children, to,
                        element(*alg, member(e, "weight", we), we / "weight"));
    }
  }
  return std::move(*a);
}

// Builtin name when it reproduces the algebra, otherwise the inline table.
Json algebra_json(const Algebra& alg) {
  const Algebra* inner = &alg;
  if (const auto* c = dynamic_cast<const CountingAlgebra*>(&alg)) inner = c->inner().get();
  const auto* table = dynamic_cast<const FiniteTableAlgebra*>(inner);
  try {
    AlgebraPtr b = builtin(inner->name());
    const auto* bt = dynamic_cast<const FiniteTableAlgebra*>(b.get());
    if (table == nullptr && bt == nullptr && b->name() == inner->name()) return inner->name();
    if (table != nullptr && bt != nullptr && bt->tables().names == table->tables().names &&
        bt->tables().add == table->tables().add && bt->tables().mul == table->tables().mul &&
        bt->tables().zero == table->tables().zero && bt->tables().one == table->tables().one) {
      return inner->name();
    }
  } catch (const LookupError&) {
  }
  if (table == nullptr) {
    throw InvalidArgument("algebra " + inner->name() + " cannot be serialized");
  }
  return Json::parse(tables_to_json(*table));
}

Json tuple_json(const Algebra& alg, const std::vector<Weight>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(alg.describe(w));
  return arr;
}

std::string pad(const std::string& s, std::size_t width) {
  // Width counts code points so that labels like "ε" align.
  std::size_t len = 0;
  for (unsigned char c : s) len += (c & 0xC0) != 0x80;
  return s + std::string(width > len ? width - len : 0, ' ');
}

}  // namespace

OperationTables parse_tables(std::string_view json_text, const std::string& source) {
  return tables_from(parse_json(json_text, source), Where(source));
}

AlgebraPtr parse_table_algebra(std::string_view json_text, const std::string& source,
                               LoadOptions opts) {
  return table_algebra_from(parse_json(json_text, source), Where(source), stem_of(source),
                            opts);
}

AlgebraPtr load_table_algebra(const std::string& path, LoadOptions opts) {
  return parse_table_algebra(read_file(path), path, opts);
}

AlgebraPtr resolve_algebra(const std::string& name_or_path, LoadOptions opts) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    return load_table_algebra(name_or_path, opts);
  }
  return builtin(name_or_path);
}

AnyAutomaton parse_automaton(std::string_view json_text, const std::string& source,
                             LoadOptions opts) {
  return automaton_from(parse_json(json_text, source), Where(source), opts);
}

AnyAutomaton load_automaton(const std::string& path, LoadOptions opts) {
  return parse_automaton(read_file(path), path, opts);
}

std::string tables_to_json(const FiniteTableAlgebra& alg) {
  const auto& t = alg.tables();
  Json j;
  j["name"] = alg.name();
  j["names"] = t.names;
  auto table = [&](const std::vector<std::vector<std::size_t>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (auto i : row) r.push_back(t.names[i]);
      rows.push_back(r);
    }
    return rows;
  };
  j["add"] = table(t.add);
  j["mul"] = table(t.mul);
  j["zero"] = t.names[t.zero];
  j["one"] = t.names[t.one];
  return j.dump(2);
}

std::string automaton_to_json(const WordAutomaton& a) {
  const Algebra& alg = a.alg();
  Json j;
  j["algebra"] = algebra_json(alg);
  j["alphabet"] = a.alphabet();
  j["states"] = a.states();
  Json initial = Json::object();
  Json final_ = Json::object();
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if (!alg.is_zero(a.initial(q))) initial[a.states()[q]] = alg.describe(a.initial(q));
    if (!alg.is_zero(a.final_weight(q))) final_[a.states()[q]] = alg.describe(a.final_weight(q));
  }
  j["initial"] = initial;
  j["final"] = final_;
  Json transitions = Json::array();
  for (std::size_t s = 0; s < a.alphabet().size(); ++s)
    for (std::size_t p = 0; p < a.num_states(); ++p)
      for (std::size_t q = 0; q < a.num_states(); ++q) {
        const Weight& w = a.transition(s, p, q);
        if (alg.is_zero(w)) continue;
        transitions.push_back({{"from", a.states()[p]},
                               {"symbol", a.alphabet()[s]},
                               {"to", a.states()[q]},
                               {"weight", alg.describe(w)}});
      }
  j["transitions"] = transitions;
  return j.dump(2);
}

std::string automaton_to_json(const TreeAutomaton& a) {
  const Algebra& alg = a.alg();
  Json j;
  j["algebra"] = algebra_json(alg);
  Json alphabet = Json::object();
  for (const auto& [name, rank] : a.alphabet().symbols()) alphabet[name] = rank;
  j["alphabet"] = alphabet;
  j["states"] = a.states();
  Json final_ = Json::object();
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if (!alg.is_zero(a.root_weight(q))) final_[a.states()[q]] = alg.describe(a.root_weight(q));
  }
  j["final"] = final_;
  Json transitions = Json::array();
  for (const auto& e : a.transitions()) {
    Json children = Json::array();
    for (auto c : e.children) children.push_back(a.states()[c]);
    transitions.push_back({{"children", children},
                           {"symbol", a.alphabet().symbol(e.symbol)},
                           {"to", a.states()[e.target]},
                           {"weight", alg.describe(e.weight)}});
  }
  j["transitions"] = transitions;
  return j.dump(2);
}

std::string report_to_json(const ValidationReport& r, const Algebra& alg) {
  Json j;
  j["algebra"] = alg.name();
  j["passed"] = r.passed();
  Json axioms = Json::array();
  for (const auto& a : r.results) {
    Json item{{"axiom", axiom_name(a.axiom)}, {"holds", a.holds}};
    if (!a.holds) item["witness"] = tuple_json(alg, a.witness);
    axioms.push_back(item);
  }
  j["axioms"] = axioms;
  return j.dump(2);
}

std::string report_to_json(const PropertyReport& r, const Algebra& alg) {
  auto section = [&](const std::vector<PropertyVerdict>& vs) {
    Json out = Json::object();
    for (const auto& v : vs) {
      Json item{{"holds", v.holds}};
      item["witness"] = v.holds ? Json(nullptr) : tuple_json(alg, v.witness);
      out[property_name(v.property)] = item;
    }
    return out;
  };
  Json j;
  j["algebra"] = r.algebra;
  j["properties"] = section(r.verdicts);
  j["halves"] = section(r.halves);
  return j.dump(2);
}

std::string report_to_table(const PropertyReport& r, const Algebra& alg) {
  std::ostringstream os;
  os << "algebra: " << r.algebra << '\n';
  auto rows = [&](const std::vector<PropertyVerdict>& vs) {
    for (const auto& v : vs) {
      os << "  " << pad(property_name(v.property), 24) << pad(v.holds ? "yes" : "no", 5);
      if (!v.holds) {
        os << "witness (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          os << (i ? ", " : "") << alg.describe(v.witness[i]);
        }
        os << ')';
      }
      os << '\n';
    }
  };
  rows(r.verdicts);
  os << "halves:\n";
  rows(r.halves);
  return os.str();
}

namespace {

Json counterexample_json(const Counterexample& ce) {
  Json j;
  j["reason"] = ce.reason;
  j["parameters"] = ce.parameters;
  std::visit(
      [&](const auto& a) {
        const Algebra& alg = a.alg();
        j["automaton"] = Json::parse(automaton_to_json(a));
        j["run"] = alg.describe(ce.run_value);
        j["init"] = alg.describe(ce.init_value);
      },
      ce.automaton);
  std::visit(
      [&](const auto& in) {
        using I = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<I, Word>) {
          j["input"] = format_word(in);
        } else {
          j["input"] = to_string(in);
        }
      },
      ce.input);
  j["revalidated"] = revalidate(ce);
  return j;
}

std::string input_text(const AnyInput& in) {
  return std::visit(
      [](const auto& x) -> std::string {
        using I = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<I, Word>) {
          return format_word(x);
        } else {
          return to_string(x);
        }
      },
      in);
}

const Algebra& algebra_of(const AnyAutomaton& a) {
  return std::visit([](const auto& x) -> const Algebra& { return x.alg(); }, a);
}

}  // namespace

std::string report_to_json(const CheckReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["algebra"] = r.algebra;
  j["seed"] = r.seed;
  j["hypothesis"] = r.hypothesis;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["verdict"] = verdict_name(r.verdict);
  j["inputs_checked"] = r.inputs_checked;
  j["automata_checked"] = r.automata_checked;
  Json subs = Json::array();
  for (const auto& s : r.subchecks) {
    subs.push_back({{"label", s.label},
                    {"expected", s.expected},
                    {"observed", s.observed},
                    {"consistent", s.consistent()}});
  }
  j["subchecks"] = subs;
  j["notes"] = r.notes;
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) ces.push_back(counterexample_json(ce));
  j["counterexamples"] = ces;
  return j.dump(2);
}

std::string report_to_table(const CheckReport& r) {
  std::ostringstream os;
  os << "theorem:     " << r.theorem << '\n'
     << "algebra:     " << r.algebra << '\n'
     << "seed:        " << r.seed << '\n'
     << "hypothesis:  " << r.hypothesis << " (" << (r.hypothesis_holds ? "holds" : "fails")
     << ")\n"
     << "verdict:     " << verdict_name(r.verdict) << '\n'
     << "checked:     " << r.automata_checked << " automata, " << r.inputs_checked
     << " inputs\n";
  for (const auto& s : r.subchecks) {
    os << "  [" << (s.consistent() ? "ok" : "MISMATCH") << "] " << s.label << ": expected "
       << (s.expected ? "true" : "false") << ", observed " << (s.observed ? "true" : "false")
       << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  for (const auto& ce : r.counterexamples) {
    const Algebra& alg = algebra_of(ce.automaton);
    os << "counterexample: " << ce.reason << '\n';
    if (!ce.parameters.empty()) {
      os << "  parameters: (";
      for (std::size_t i = 0; i < ce.parameters.size(); ++i) {
        os << (i ? ", " : "") << ce.parameters[i];
      }
      os << ")\n";
    }
    os << "  input: " << input_text(ce.input) << '\n'
       << "  run = " << alg.describe(ce.run_value) << ", init = " << alg.describe(ce.init_value)
       << '\n';
  }
  return os.str();
}

std::string report_to_json(const CostProfile& p, const Algebra& alg) {
  Json j;
  j["states"] = p.num_states;
  j["input_size"] = p.input_size;
  Json rows = Json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"semantics", semantics_name(r.semantics)},
                    {"adds", r.measured.adds},
                    {"muls", r.measured.muls},
                    {"predicted_adds", r.predicted.adds},
                    {"predicted_muls", r.predicted.muls},
                    {"value", alg.describe(r.value)}});
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string report_to_table(const CostProfile& p, const Algebra& alg) {
  std::ostringstream os;
  os << "states: " << p.num_states << ", input size: " << p.input_size << '\n';
  os << pad("semantics", 11) << pad("adds", 12) << pad("muls", 12) << pad("pred adds", 12)
     << pad("pred muls", 12) << "value\n";
  for (const auto& r : p.rows) {
    os << pad(semantics_name(r.semantics), 11) << pad(std::to_string(r.measured.adds), 12)
       << pad(std::to_string(r.measured.muls), 12) << pad(std::to_string(r.predicted.adds), 12)
       << pad(std::to_string(r.predicted.muls), 12) << alg.describe(r.value) << '\n';
  }
  return os.str();
}

}  // namespace sbwa
