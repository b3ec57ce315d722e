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

#include "sbwa/cut.hpp"

#include "sbwa/error.hpp"

namespace sbwa {

bool is_valid_cut(const Tree& t, const Cut& cut) {
  if (cut.empty()) return false;
  for (const auto& p : cut) {
    if (!is_position(t, p)) return false;
  }
  for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
    if (!left_of(cut[i], cut[i + 1])) return false;
  }
  for (std::size_t i = 0; i < cut.size(); ++i) {
    for (std::size_t j = 0; j < cut.size(); ++j) {
      if (i != j && is_prefix(cut[i], cut[j])) return false;
    }
  }
  for (const auto& l : leaves(t)) {
    bool covered = false;
    for (const auto& p : cut) covered = covered || is_prefix(p, l);
    if (!covered) return false;
  }
  return true;
}

namespace {

std::vector<Cut> cuts_below(const Tree& t, Position& at) {
  std::vector<Cut> out{Cut{at}};
  if (t.children.empty()) return out;
  std::vector<Cut> partial{Cut{}};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    at.push_back(i + 1);
    const auto child_cuts = cuts_below(t.children[i], at);
    at.pop_back();
    std::vector<Cut> next;
    for (const auto& prefix : partial) {
      for (const auto& c : child_cuts) {
        Cut joined = prefix;
        joined.insert(joined.end(), c.begin(), c.end());
        next.push_back(std::move(joined));
      }
    }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
  return out;
}

}  // namespace

std::vector<Cut> all_cuts(const Tree& t) {
  Position root;
  return cuts_below(t, root);
}

Cut root_cut() { return Cut{Position{}}; }

Cut lcut(const Tree& t) { return leaves(t); }

bool can_expand(const Tree& t, const Cut& cut, std::size_t i) {
  return i < cut.size() && is_position(t, cut[i]) &&
         !subtree_at(t, cut[i]).children.empty();
}

Cut expand(const Tree& t, const Cut& cut, std::size_t i) {
  if (!can_expand(t, cut, i)) {
    throw InvalidArgument("cannot expand " + format_cut(cut) + " at index " + std::to_string(i));
  }
  const std::size_t k = subtree_at(t, cut[i]).children.size();
  Cut out(cut.begin(), cut.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t c = 1; c <= k; ++c) {
    Position p = cut[i];
    p.push_back(c);
    out.push_back(std::move(p));
  }
  out.insert(out.end(), cut.begin() + static_cast<std::ptrdiff_t>(i) + 1, cut.end());
  return out;
}

bool can_merge(const Tree& t, const Cut& cut, std::size_t i) {
  if (i >= cut.size() || cut[i].empty() || cut[i].back() != 1) return false;
  Position parent(cut[i].begin(), cut[i].end() - 1);
  if (!is_position(t, parent)) return false;
  const std::size_t k = subtree_at(t, parent).children.size();
  if (i + k > cut.size()) return false;
  for (std::size_t c = 0; c < k; ++c) {
    Position expected = parent;
    expected.push_back(c + 1);
    if (cut[i + c] != expected) return false;
  }
  return true;
}

Cut merge(const Tree& t, const Cut& cut, std::size_t i) {
  if (!can_merge(t, cut, i)) {
    throw InvalidArgument("positions of " + format_cut(cut) + " from index " +
                          std::to_string(i) + " are not a complete children block");
  }
  Position parent(cut[i].begin(), cut[i].end() - 1);
  const std::size_t k = subtree_at(t, parent).children.size();
  Cut out(cut.begin(), cut.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(std::move(parent));
  out.insert(out.end(), cut.begin() + static_cast<std::ptrdiff_t>(i + k), cut.end());
  return out;
}

bool is_normal_form(const Tree& t, const Cut& cut, CutRelation relation) {
  for (std::size_t i = 0; i < cut.size(); ++i) {
    if (relation == CutRelation::Expand ? can_expand(t, cut, i) : can_merge(t, cut, i)) {
      return false;
    }
  }
  return true;
}

std::string format_cut(const Cut& cut) {
  std::string out = "(";
  for (std::size_t i = 0; i < cut.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_position(cut[i]);
  }
  return out + ")";
}

}  // namespace sbwa
