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

#ifndef SBWA_RANKED_ALPHABET_HPP_
#define SBWA_RANKED_ALPHABET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sbwa {

/// Finite set of symbols with ranks.  Symbol order is insertion order and
/// is the order used for tree enumeration.
class RankedAlphabet {
 public:
  /// Throws InvalidArgument on duplicates or when no symbol has rank 0.
  explicit RankedAlphabet(std::vector<std::pair<std::string, std::size_t>> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t id) const { return symbols_[id].first; }
  std::size_t rank(std::size_t id) const { return symbols_[id].second; }
  const std::vector<std::pair<std::string, std::size_t>>& symbols() const {
    return symbols_;
  }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws LookupError for unknown names.
  std::size_t id(std::string_view name) const;
  std::size_t rank_of(std::string_view name) const { return rank(id(name)); }
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::vector<std::string> of_rank(std::size_t k) const;
  std::size_t max_rank() const;

  /// "alpha:0,sigma:2"
  std::string to_string() const;
  /// Inverse of to_string; whitespace ignored.
  static RankedAlphabet parse(std::string_view text);

  bool operator==(const RankedAlphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::pair<std::string, std::size_t>> symbols_;
  std::unordered_map<std::string, std::size_t> ids_;
};

struct AlphabetClass {
  bool trivial = false;        // every rank is 0
  bool monadic = false;        // every rank is <= 1
  bool string_ranked = false;  // monadic, one nullary symbol, some unary
  bool branching = false;      // not monadic
};

AlphabetClass classify_alphabet(const RankedAlphabet& alphabet);

}  // namespace sbwa

#endif  // SBWA_RANKED_ALPHABET_HPP_
