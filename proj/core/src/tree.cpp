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

#include "sbwa/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "sbwa/error.hpp"

namespace sbwa {

Tree leaf(std::string symbol) { return Tree{std::move(symbol), {}}; }

Tree node(std::string symbol, std::vector<Tree> children) {
  return Tree{std::move(symbol), std::move(children)};
}

std::string format_position(const Position& p) {
  if (p.empty()) return "ε";
  const bool wide = std::any_of(p.begin(), p.end(), [](std::size_t i) { return i > 9; });
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

void validate_tree(const Tree& t, const RankedAlphabet& alphabet) {
  auto id = alphabet.find(t.symbol);
  if (!id) throw ParseError("unknown symbol '" + t.symbol + "'");
  if (alphabet.rank(*id) != t.children.size()) {
    throw ParseError("symbol '" + t.symbol + "' has rank " +
                     std::to_string(alphabet.rank(*id)) + " but " +
                     std::to_string(t.children.size()) + " children");
  }
  for (const auto& c : t.children) validate_tree(c, alphabet);
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Tree parse() {
    Tree t = term();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  Tree term() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a symbol");
    Tree t{std::string(text_.substr(start, pos_ - start)), {}};
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        t.children.push_back(term());
        skip();
        if (pos_ >= text_.size()) fail("unclosed '('");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const Tree& t, Position& p, std::vector<Position>& out, bool pre) {
  if (pre) out.push_back(p);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    p.push_back(i + 1);
    collect(t.children[i], p, out, pre);
    p.pop_back();
  }
  if (!pre) out.push_back(p);
}

}  // namespace

Tree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

Tree parse_tree(std::string_view text, const RankedAlphabet& alphabet) {
  Tree t = parse_tree(text);
  validate_tree(t, alphabet);
  return t;
}

std::string to_string(const Tree& t) {
  std::string out = t.symbol;
  if (!t.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(t.children[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<Position> positions(const Tree& t) {
  std::vector<Position> out;
  Position p;
  collect(t, p, out, true);
  return out;
}

std::vector<Position> postorder(const Tree& t) {
  std::vector<Position> out;
  Position p;
  collect(t, p, out, false);
  return out;
}

std::vector<Position> leaves(const Tree& t) {
  std::vector<Position> out;
  for (auto& p : positions(t)) {
    if (subtree_at(t, p).children.empty()) out.push_back(std::move(p));
  }
  return out;
}

std::size_t size(const Tree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += size(c);
  return n;
}

std::size_t height(const Tree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, height(c) + 1);
  return h;
}

bool is_position(const Tree& t, const Position& p) {
  const Tree* cur = &t;
  for (std::size_t i : p) {
    if (i == 0 || i > cur->children.size()) return false;
    cur = &cur->children[i - 1];
  }
  return true;
}

const Tree& subtree_at(const Tree& t, const Position& p) {
  const Tree* cur = &t;
  for (std::size_t i : p) {
    if (i == 0 || i > cur->children.size()) {
      throw InvalidArgument("position " + format_position(p) + " is not in " + to_string(t));
    }
    cur = &cur->children[i - 1];
  }
  return *cur;
}

const std::string& label_at(const Tree& t, const Position& p) {
  return subtree_at(t, p).symbol;
}

bool Tree::operator<(const Tree& other) const {
  if (symbol != other.symbol) return symbol < other.symbol;
  return std::lexicographical_compare(children.begin(), children.end(),
                                      other.children.begin(), other.children.end());
}

bool is_prefix(const Position& prefix, const Position& p) {
  return prefix.size() <= p.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

bool left_of(const Position& p, const Position& q) {
  const std::size_t n = std::min(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != q[i]) return p[i] < q[i];
  }
  return false;
}

namespace {

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const RankedAlphabet& alphabet) : alphabet_(alphabet) {}

  const std::vector<Tree>& of_size(std::size_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::vector<Tree> out;
    for (const auto& [symbol, rank] : alphabet_.symbols()) {
      if (rank == 0) {
        if (n == 1) out.push_back(leaf(symbol));
        continue;
      }
      if (n < rank + 1) continue;
      std::vector<Tree> children;
      fill(symbol, rank, n - 1, children, out);
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  // Chooses the remaining children left to right, smallest sizes first.
  void fill(const std::string& symbol, std::size_t rank, std::size_t budget,
            std::vector<Tree>& children, std::vector<Tree>& out) {
    const std::size_t left = rank - children.size();
    if (left == 0) {
      if (budget == 0) out.push_back(node(symbol, children));
      return;
    }
    const std::size_t max_here = budget - (left - 1);
    for (std::size_t s = 1; s <= max_here; ++s) {
      if (left == 1 && s != budget) continue;
      const std::vector<Tree>& options = of_size(s);
      for (const auto& c : options) {
        children.push_back(c);
        fill(symbol, rank, budget - s, children, out);
        children.pop_back();
      }
    }
  }

  const RankedAlphabet& alphabet_;
  std::map<std::size_t, std::vector<Tree>> memo_;
};

}  // namespace

std::vector<Tree> trees_of_size(const RankedAlphabet& alphabet, std::size_t n) {
  if (n == 0) return {};
  return TreeEnumerator(alphabet).of_size(n);
}

std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet, std::size_t max_size) {
  TreeEnumerator e(alphabet);
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto& trees = e.of_size(n);
    out.insert(out.end(), trees.begin(), trees.end());
  }
  return out;
}

}  // namespace sbwa
