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

#include "sbwa/table_algebra.hpp"

#include <sstream>
#include <unordered_set>

#include "sbwa/error.hpp"

namespace sbwa {

void check_structure(const OperationTables& t) {
  const std::size_t n = t.names.size();
  if (n == 0) throw StructuralError("carrier is empty");
  std::unordered_set<std::string> seen;
  for (const auto& name : t.names) {
    if (!seen.insert(name).second) {
      throw StructuralError("duplicate element name '" + name + "'");
    }
  }
  auto check_table = [&](const std::vector<std::vector<std::size_t>>& table,
                         const char* which) {
    if (table.size() != n) {
      throw StructuralError(std::string(which) + " table has " +
                            std::to_string(table.size()) + " rows, expected " +
                            std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw StructuralError(std::string(which) + " table row " +
                              std::to_string(i) + " has " +
                              std::to_string(table[i].size()) +
                              " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw StructuralError(std::string(which) + " table entry [" +
                                std::to_string(i) + "][" + std::to_string(j) +
                                "] = " + std::to_string(table[i][j]) +
                                " is out of range");
        }
      }
    }
  };
  check_table(t.add, "add");
  check_table(t.mul, "mul");
  if (t.zero >= n) throw StructuralError("zero index out of range");
  if (t.one >= n) throw StructuralError("one index out of range");
}

FiniteTableAlgebra::FiniteTableAlgebra(std::string name, OperationTables tables)
    : name_(std::move(name)), tables_(std::move(tables)) {
  check_structure(tables_);
  for (std::size_t i = 0; i < tables_.names.size(); ++i) {
    by_name_.emplace(tables_.names[i], i);
  }
}

std::size_t FiniteTableAlgebra::index_of(const Weight& w) const {
  const auto* i = std::get_if<std::size_t>(&w);
  if (i == nullptr || *i >= size()) {
    throw InvalidArgument("weight is not an element of " + name_);
  }
  return *i;
}

Weight FiniteTableAlgebra::add(const Weight& a, const Weight& b) const {
  return tables_.add[index_of(a)][index_of(b)];
}

Weight FiniteTableAlgebra::mul(const Weight& a, const Weight& b) const {
  return tables_.mul[index_of(a)][index_of(b)];
}

std::string FiniteTableAlgebra::describe(const Weight& w) const {
  return tables_.names[index_of(w)];
}

Weight FiniteTableAlgebra::parse(std::string_view label) const {
  auto it = by_name_.find(std::string(label));
  if (it == by_name_.end()) {
    throw LookupError("'" + std::string(label) + "' is not an element of " +
                      name_);
  }
  return it->second;
}

std::vector<Weight> FiniteTableAlgebra::elements() const {
  std::vector<Weight> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::AddAssociative: return "add-associative";
    case Axiom::AddCommutative: return "add-commutative";
    case Axiom::AddIdentity: return "add-identity";
    case Axiom::MulAssociative: return "mul-associative";
    case Axiom::MulIdentity: return "mul-identity";
    case Axiom::ZeroAnnihilates: return "zero-annihilates";
  }
  return "?";
}

bool ValidationReport::passed() const {
  for (const auto& r : results) {
    if (!r.holds) return false;
  }
  return true;
}

const AxiomResult* ValidationReport::find(Axiom axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

std::string ValidationReport::summary(const Algebra& alg) const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << axiom_name(r.axiom) << ": " << (r.holds ? "ok" : "FAILS");
    if (!r.holds) {
      os << " at (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) {
        os << (i ? ", " : "") << alg.describe(r.witness[i]);
      }
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Runs pred over all tuples of the given arity, first component outermost,
// and returns the first tuple for which it fails.
template <class Pred>
AxiomResult search(Axiom axiom, const std::vector<Weight>& els,
                   std::size_t arity, Pred pred) {
  AxiomResult result{axiom, true, {}};
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Weight> tuple(arity);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = els[idx[i]];
    if (!pred(tuple)) {
      result.holds = false;
      result.witness = tuple;
      return result;
    }
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < els.size()) break;
      idx[pos] = 0;
      if (pos == 0) return result;
    }
  }
}

}  // namespace

ValidationReport validate_axioms(const Algebra& alg) {
  const auto els = alg.elements();
  const Weight zero = alg.zero();
  const Weight one = alg.one();
  auto eq = [&](const Weight& x, const Weight& y) { return alg.equal(x, y); };

  ValidationReport report;
  report.results.push_back(search(
      Axiom::AddAssociative, els, 3, [&](const std::vector<Weight>& t) {
        return eq(alg.add(alg.add(t[0], t[1]), t[2]),
                  alg.add(t[0], alg.add(t[1], t[2])));
      }));
  report.results.push_back(search(
      Axiom::AddCommutative, els, 2, [&](const std::vector<Weight>& t) {
        return eq(alg.add(t[0], t[1]), alg.add(t[1], t[0]));
      }));
  report.results.push_back(search(
      Axiom::AddIdentity, els, 1, [&](const std::vector<Weight>& t) {
        return eq(alg.add(t[0], zero), t[0]) && eq(alg.add(zero, t[0]), t[0]);
      }));
  report.results.push_back(search(
      Axiom::MulAssociative, els, 3, [&](const std::vector<Weight>& t) {
        return eq(alg.mul(alg.mul(t[0], t[1]), t[2]),
                  alg.mul(t[0], alg.mul(t[1], t[2])));
      }));
  report.results.push_back(search(
      Axiom::MulIdentity, els, 1, [&](const std::vector<Weight>& t) {
        return eq(alg.mul(t[0], one), t[0]) && eq(alg.mul(one, t[0]), t[0]);
      }));
  report.results.push_back(search(
      Axiom::ZeroAnnihilates, els, 1, [&](const std::vector<Weight>& t) {
        return eq(alg.mul(t[0], zero), zero) && eq(alg.mul(zero, t[0]), zero);
      }));
  return report;
}

ValidationReport validate_axioms(const OperationTables& tables) {
  check_structure(tables);
  return validate_axioms(FiniteTableAlgebra("table", tables));
}

}  // namespace sbwa
