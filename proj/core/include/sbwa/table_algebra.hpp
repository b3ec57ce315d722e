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

#ifndef SBWA_TABLE_ALGEBRA_HPP_
#define SBWA_TABLE_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbwa/algebra.hpp"

namespace sbwa {

/// Raw operation tables of a finite algebra, as read from a file.  Nothing
/// about them is checked; see check_structure and validate_axioms.
struct OperationTables {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t zero = 0;
  std::size_t one = 0;
};

/// Throws StructuralError unless both tables are n x n with entries in
/// [0, n), zero/one are in range, n >= 1 and names are distinct.
void check_structure(const OperationTables& tables);

/// Finite strong bimonoid given by explicit tables.  Elements are the
/// indices 0..n-1 (stored as Weight's std::size_t alternative).
///
/// The constructor only checks structure; axioms are checked separately
/// with validate_axioms.
class FiniteTableAlgebra final : public Algebra {
 public:
  FiniteTableAlgebra(std::string name, OperationTables tables);

  std::string name() const override { return name_; }
  Weight zero() const override { return tables_.zero; }
  Weight one() const override { return tables_.one; }
  Weight add(const Weight& a, const Weight& b) const override;
  Weight mul(const Weight& a, const Weight& b) const override;
  std::string describe(const Weight& w) const override;
  Weight parse(std::string_view label) const override;
  bool is_finite() const override { return true; }
  std::vector<Weight> elements() const override;

  std::size_t size() const { return tables_.names.size(); }
  const OperationTables& tables() const { return tables_; }
  std::size_t index_of(const Weight& w) const;

 private:
  std::string name_;
  OperationTables tables_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

enum class Axiom {
  AddAssociative,
  AddCommutative,
  AddIdentity,
  MulAssociative,
  MulIdentity,
  ZeroAnnihilates,
};

std::string axiom_name(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool holds = true;
  /// First violating tuple in enumeration order (empty when holds).
  std::vector<Weight> witness;
};

struct ValidationReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* find(Axiom axiom) const;
  /// One line per axiom with witness labels.
  std::string summary(const Algebra& alg) const;
};

/// Checks every strong-bimonoid axiom exhaustively over the carrier.
ValidationReport validate_axioms(const Algebra& alg);

/// Structural check first (StructuralError on malformed tables), then the
/// exhaustive axiom check.
ValidationReport validate_axioms(const OperationTables& tables);

}  // namespace sbwa

#endif  // SBWA_TABLE_ALGEBRA_HPP_
