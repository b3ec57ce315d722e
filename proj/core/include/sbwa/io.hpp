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

#ifndef SBWA_IO_HPP_
#define SBWA_IO_HPP_

#include <string>
#include <string_view>

#include "sbwa/harness.hpp"
#include "sbwa/properties.hpp"
#include "sbwa/table_algebra.hpp"

namespace sbwa {

// File formats (JSON).
//
// Algebra table:
//   {"names": [...], "add": [[name...]...], "mul": [[...]...],
//    "zero": name, "one": name}
//
// Word automaton:
//   {"algebra": "B4" | {table}, "alphabet": ["x", ...], "states": [...],
//    "initial": {state: element}, "final": {state: element},
//    "transitions": [{"from": s, "symbol": a, "to": s, "weight": e}]}
//
// Tree automaton: as above but "alphabet" maps symbols to ranks, there is
// no "initial", "final" holds root weights and transitions are
//   {"children": [s...], "symbol": a, "to": s, "weight": e}.
//
// Omitted weights are zero.  Errors name the source and the JSON path.

struct LoadOptions {
  /// Accept algebra tables that fail validate_axioms.
  bool allow_invalid = false;
};

OperationTables parse_tables(std::string_view json_text,
                             const std::string& source);

AlgebraPtr parse_table_algebra(std::string_view json_text,
                               const std::string& source,
                               LoadOptions opts = {});
AlgebraPtr load_table_algebra(const std::string& path, LoadOptions opts = {});

/// A path to an existing table file, otherwise a builtin name.
AlgebraPtr resolve_algebra(const std::string& name_or_path,
                           LoadOptions opts = {});

AnyAutomaton parse_automaton(std::string_view json_text,
                             const std::string& source, LoadOptions opts = {});
AnyAutomaton load_automaton(const std::string& path, LoadOptions opts = {});

std::string tables_to_json(const FiniteTableAlgebra& alg);
std::string automaton_to_json(const WordAutomaton& a);
std::string automaton_to_json(const TreeAutomaton& a);

std::string report_to_json(const ValidationReport& r, const Algebra& alg);
std::string report_to_json(const PropertyReport& r, const Algebra& alg);
std::string report_to_table(const PropertyReport& r, const Algebra& alg);
std::string report_to_json(const CheckReport& r);
std::string report_to_table(const CheckReport& r);
std::string report_to_json(const CostProfile& p, const Algebra& alg);
std::string report_to_table(const CostProfile& p, const Algebra& alg);

}  // namespace sbwa

#endif  // SBWA_IO_HPP_
