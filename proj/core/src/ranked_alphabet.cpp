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

#include "sbwa/ranked_alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sbwa/error.hpp"

namespace sbwa {

RankedAlphabet::RankedAlphabet(std::vector<std::pair<std::string, std::size_t>> symbols)
    : symbols_(std::move(symbols)) {
  bool nullary = false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& [name, rank] = symbols_[i];
    if (name.empty()) throw InvalidArgument("empty symbol name");
    if (!ids_.emplace(name, i).second) {
      throw InvalidArgument("duplicate symbol '" + name + "'");
    }
    nullary = nullary || rank == 0;
  }
  if (!nullary) throw InvalidArgument("ranked alphabet has no symbol of rank 0");
}

std::optional<std::size_t> RankedAlphabet::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t RankedAlphabet::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw LookupError("unknown symbol '" + std::string(name) + "'");
  return *found;
}

std::vector<std::string> RankedAlphabet::of_rank(std::size_t k) const {
  std::vector<std::string> out;
  for (const auto& [name, rank] : symbols_) {
    if (rank == k) out.push_back(name);
  }
  return out;
}

std::size_t RankedAlphabet::max_rank() const {
  std::size_t m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.second);
  return m;
}

std::string RankedAlphabet::to_string() const {
  std::string out;
  for (const auto& [name, rank] : symbols_) {
    if (!out.empty()) out += ',';
    out += name + ':' + std::to_string(rank);
  }
  return out;
}

RankedAlphabet RankedAlphabet::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<std::pair<std::string, std::size_t>> symbols;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t end = s.find(',', i);
    if (end == std::string::npos) end = s.size();
    const std::string item = s.substr(i, end - i);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
      throw ParseError("ranked alphabet entry '" + item + "' is not of the form name:rank");
    }
    std::size_t rank = 0;
    const char* first = item.data() + colon + 1;
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("bad rank in ranked alphabet entry '" + item + "'");
    }
    symbols.emplace_back(item.substr(0, colon), rank);
    i = end + 1;
  }
  if (symbols.empty()) throw ParseError("empty ranked alphabet");
  try {
    return RankedAlphabet(std::move(symbols));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

AlphabetClass classify_alphabet(const RankedAlphabet& alphabet) {
  AlphabetClass c;
  const std::size_t max = alphabet.max_rank();
  c.trivial = max == 0;
  c.monadic = max <= 1;
  c.branching = !c.monadic;
  c.string_ranked = c.monadic && !c.trivial && alphabet.of_rank(0).size() == 1;
  return c;
}

}  // namespace sbwa
