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

#ifndef SBWA_TREE_HPP_
#define SBWA_TREE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sbwa/ranked_alphabet.hpp"

namespace sbwa {

/// Term over a ranked alphabet.  Symbols are stored by name so that trees
/// can move between an alphabet and its restrictions; arities are checked
/// by validate_tree / parse_tree.
struct Tree {
  std::string symbol;
  std::vector<Tree> children;

  bool operator==(const Tree&) const = default;
  /// Symbol first, then children lexicographically.
  bool operator<(const Tree& other) const;
};

Tree leaf(std::string symbol);
Tree node(std::string symbol, std::vector<Tree> children);

/// Path of 1-based child indices; the root is the empty position.
using Position = std::vector<std::size_t>;

/// "ε" for the root, digits otherwise ("11", "2"); indices above 9 are
/// dot-separated ("1.12").
std::string format_position(const Position& p);

/// Throws ParseError on unknown symbols or arity mismatches.
void validate_tree(const Tree& t, const RankedAlphabet& alphabet);

/// Parses "sigma(alpha, sigma(alpha,alpha))"; whitespace insignificant.
Tree parse_tree(std::string_view text, const RankedAlphabet& alphabet);
/// Parses without arity checking (arity taken from the text).
Tree parse_tree(std::string_view text);
std::string to_string(const Tree& t);

/// Positions in lexicographic (pre-) order.
std::vector<Position> positions(const Tree& t);
/// Positions in depth-first post-order.
std::vector<Position> postorder(const Tree& t);
/// Leaf positions from left to right.
std::vector<Position> leaves(const Tree& t);
std::size_t size(const Tree& t);
std::size_t height(const Tree& t);

bool is_position(const Tree& t, const Position& p);
/// Throw InvalidArgument for positions not in pos(t).
const std::string& label_at(const Tree& t, const Position& p);
const Tree& subtree_at(const Tree& t, const Position& p);

bool is_prefix(const Position& prefix, const Position& p);
/// Strict left-of: the positions diverge and p's branch is left of q's.
bool left_of(const Position& p, const Position& q);

/// All trees with exactly n nodes.  Ordered by root symbol (alphabet
/// order), then by the sizes of the children left to right, then by the
/// children themselves left to right.
std::vector<Tree> trees_of_size(const RankedAlphabet& alphabet, std::size_t n);
/// All trees with at most max_size nodes, by size then as above.
std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet,
                                  std::size_t max_size);

}  // namespace sbwa

#endif  // SBWA_TREE_HPP_
