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

#ifndef SBWA_BUILTIN_HPP_
#define SBWA_BUILTIN_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sbwa/algebra.hpp"
#include "sbwa/table_algebra.hpp"

namespace sbwa {

/// (N u {inf}, +, min, 0, inf).
class NatPlusMin final : public Algebra {
 public:
  std::string name() const override { return "NatPlusMin"; }
  Weight zero() const override;
  Weight one() const override;
  Weight add(const Weight& a, const Weight& b) const override;
  Weight mul(const Weight& a, const Weight& b) const override;
  std::string describe(const Weight& w) const override;
  Weight parse(std::string_view label) const override;
};

/// (N u {bot}, (+), +, bot, 0): both operations are addition on N; bot is
/// the identity of the first and absorbing for the second.
class NatPlusPlus final : public Algebra {
 public:
  std::string name() const override { return "NatPlusPlus"; }
  Weight zero() const override;
  Weight one() const override;
  Weight add(const Weight& a, const Weight& b) const override;
  Weight mul(const Weight& a, const Weight& b) const override;
  std::string describe(const Weight& w) const override;
  Weight parse(std::string_view label) const override;
};

/// Polynomials over N with ordinary addition and the case-split product:
/// p * q is the ordinary product when q is a monome, and p(0) * q otherwise.
/// The unit is the constant polynomial 1.
class PolyMonome final : public Algebra {
 public:
  std::string name() const override { return "PolyMonome"; }
  Weight zero() const override;
  Weight one() const override;
  Weight add(const Weight& a, const Weight& b) const override;
  Weight mul(const Weight& a, const Weight& b) const override;
  std::string describe(const Weight& w) const override;
  Weight parse(std::string_view label) const override;
};

// Finite algebras, materialized as tables.
std::shared_ptr<const FiniteTableAlgebra> make_boole();
/// Pentagon N5: 0 < p < q < 1 and 0 < r < 1.
std::shared_ptr<const FiniteTableAlgebra> make_pentagon();
/// Hexagon: 0 < p < q < 1 and 0 < r < s < 1.
std::shared_ptr<const FiniteTableAlgebra> make_hexagon();
/// Four-element Boolean lattice 0 < a, b < 1 (distributive, not positive).
std::shared_ptr<const FiniteTableAlgebra> make_diamond();
std::shared_ptr<const FiniteTableAlgebra> make_b4();
std::shared_ptr<const FiniteTableAlgebra> make_b3prime();
/// Functions f: [0,m] -> [0,m] with f(0) = 0 under pointwise addition
/// saturating at m and composition (f*g)(c) = f(g(c)).  Element labels list
/// the values f(0), ..., f(m), e.g. "[0,1,0]".
std::shared_ptr<const FiniteTableAlgebra> make_trunc_fun(std::size_t m = 2);

/// Bounded lattice from its covering relation (pairs lower < upper).  The
/// first name must be the bottom; join is add, meet is mul.
std::shared_ptr<const FiniteTableAlgebra> make_lattice(
    std::string name, std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& covers);

/// Looks up a builtin by name (case-insensitive; "pentagon"/"hexagon"
/// accepted as aliases, "TruncFun" alone means TruncFun(2)).  Throws
/// LookupError listing valid names.
AlgebraPtr builtin(std::string_view name);

std::vector<std::string> builtin_names();

/// Every bundled finite algebra: Boole, PentagonN5, Hexagon, Diamond, B4,
/// B3prime, TruncFun(2).
std::vector<AlgebraPtr> bundled_finite_algebras();

}  // namespace sbwa

#endif  // SBWA_BUILTIN_HPP_
