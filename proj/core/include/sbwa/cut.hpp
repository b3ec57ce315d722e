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

#ifndef SBWA_CUT_HPP_
#define SBWA_CUT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "sbwa/tree.hpp"

namespace sbwa {

/// Maximal antichain of positions of a tree, listed left to right.
using Cut = std::vector<Position>;

enum class CutRelation {
  Expand,  // replace a non-leaf position by its children
  Merge,   // replace the full children block of a position by the position
};

/// Independent, strictly ordered by left-of, and complete (every leaf lies
/// below some cut position).
bool is_valid_cut(const Tree& t, const Cut& cut);

/// Every cut through t, in no particular order.
std::vector<Cut> all_cuts(const Tree& t);
Cut root_cut();
Cut lcut(const Tree& t);

/// One expand step at index i (0-based).  InvalidArgument when i is out of
/// range or cut[i] is a leaf.
Cut expand(const Tree& t, const Cut& cut, std::size_t i);
/// One merge step: cut[i .. i+k-1] must be exactly the k children of their
/// common parent.  InvalidArgument otherwise.
Cut merge(const Tree& t, const Cut& cut, std::size_t i);

bool can_expand(const Tree& t, const Cut& cut, std::size_t i);
bool can_merge(const Tree& t, const Cut& cut, std::size_t i);

/// No step of the given relation applies.
bool is_normal_form(const Tree& t, const Cut& cut, CutRelation relation);

std::string format_cut(const Cut& cut);

}  // namespace sbwa

#endif  // SBWA_CUT_HPP_
