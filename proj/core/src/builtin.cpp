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

#include "sbwa/builtin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sbwa/error.hpp"

namespace sbwa {

namespace {

const ExtNat& as_ext(const Weight& w, const char* alg) {
  const auto* e = std::get_if<ExtNat>(&w);
  if (e == nullptr) throw InvalidArgument(std::string("weight is not an element of ") + alg);
  return *e;
}

const Polynomial& as_poly(const Weight& w) {
  const auto* p = std::get_if<Polynomial>(&w);
  if (p == nullptr) throw InvalidArgument("weight is not an element of PolyMonome");
  return *p;
}

Natural parse_natural(std::string_view label, const char* alg) {
  if (label.empty() ||
      !std::all_of(label.begin(), label.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("'" + std::string(label) + "' is not an element of " + alg);
  }
  return Natural(std::string(label));
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Weight NatPlusMin::zero() const { return ExtNat::of(0); }
Weight NatPlusMin::one() const { return ExtNat::extra(); }

Weight NatPlusMin::add(const Weight& a, const Weight& b) const {
  const auto& x = as_ext(a, "NatPlusMin");
  const auto& y = as_ext(b, "NatPlusMin");
  if (x.adjoined || y.adjoined) return ExtNat::extra();
  return ExtNat::of(x.value + y.value);
}

Weight NatPlusMin::mul(const Weight& a, const Weight& b) const {
  const auto& x = as_ext(a, "NatPlusMin");
  const auto& y = as_ext(b, "NatPlusMin");
  if (x.adjoined) return y;
  if (y.adjoined) return x;
  return ExtNat::of(x.value < y.value ? x.value : y.value);
}

std::string NatPlusMin::describe(const Weight& w) const {
  const auto& x = as_ext(w, "NatPlusMin");
  return x.adjoined ? "inf" : x.value.str();
}

Weight NatPlusMin::parse(std::string_view label) const {
  if (label == "inf" || label == "∞") return ExtNat::extra();
  return ExtNat::of(parse_natural(label, "NatPlusMin"));
}

Weight NatPlusPlus::zero() const { return ExtNat::extra(); }
Weight NatPlusPlus::one() const { return ExtNat::of(0); }

Weight NatPlusPlus::add(const Weight& a, const Weight& b) const {
  const auto& x = as_ext(a, "NatPlusPlus");
  const auto& y = as_ext(b, "NatPlusPlus");
  if (x.adjoined) return y;
  if (y.adjoined) return x;
  return ExtNat::of(x.value + y.value);
}

Weight NatPlusPlus::mul(const Weight& a, const Weight& b) const {
  const auto& x = as_ext(a, "NatPlusPlus");
  const auto& y = as_ext(b, "NatPlusPlus");
  if (x.adjoined || y.adjoined) return ExtNat::extra();
  return ExtNat::of(x.value + y.value);
}

std::string NatPlusPlus::describe(const Weight& w) const {
  const auto& x = as_ext(w, "NatPlusPlus");
  return x.adjoined ? "bot" : x.value.str();
}

Weight NatPlusPlus::parse(std::string_view label) const {
  if (label == "bot" || label == "𝟘") return ExtNat::extra();
  return ExtNat::of(parse_natural(label, "NatPlusPlus"));
}

Weight PolyMonome::zero() const { return Polynomial(); }
Weight PolyMonome::one() const { return Polynomial::constant(1); }

Weight PolyMonome::add(const Weight& a, const Weight& b) const {
  return as_poly(a) + as_poly(b);
}

Weight PolyMonome::mul(const Weight& a, const Weight& b) const {
  const auto& p = as_poly(a);
  const auto& q = as_poly(b);
  if (q.is_monome()) return p * q;
  return q.scaled(p.at_zero());
}

std::string PolyMonome::describe(const Weight& w) const {
  return as_poly(w).to_string();
}

Weight PolyMonome::parse(std::string_view label) const {
  return Polynomial::parse(label);
}

std::shared_ptr<const FiniteTableAlgebra> make_lattice(
    std::string name, std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = names.size();
  if (n == 0) throw StructuralError("lattice " + name + " has no elements");
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
      throw StructuralError("lattice " + name + ": unknown element '" + s + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : covers) leq[index(lo)][index(hi)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;

  // Least upper bound (up = true) or greatest lower bound of i and j.
  auto bound = [&](std::size_t i, std::size_t j, bool up) {
    auto below = [&](std::size_t x, std::size_t y) { return up ? leq[x][y] : leq[y][x]; };
    for (std::size_t u = 0; u < n; ++u) {
      if (!below(i, u) || !below(j, u)) continue;
      bool least = true;
      for (std::size_t v = 0; v < n && least; ++v) {
        if (below(i, v) && below(j, v) && !below(u, v)) least = false;
      }
      if (least) return u;
    }
    throw StructuralError("lattice " + name + ": " + names[i] + " and " +
                          names[j] + " have no " + (up ? "join" : "meet"));
  };

  OperationTables t;
  t.add.assign(n, std::vector<std::size_t>(n));
  t.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i][j] = bound(i, j, true);
      t.mul[i][j] = bound(i, j, false);
    }
  }
  t.zero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[0][i]) throw StructuralError("lattice " + name + ": first element is not the bottom");
  }
  t.one = bound(0, 0, true);
  for (std::size_t i = 0; i < n; ++i) t.one = bound(t.one, i, true);
  t.names = std::move(names);
  return std::make_shared<FiniteTableAlgebra>(std::move(name), std::move(t));
}

std::shared_ptr<const FiniteTableAlgebra> make_boole() {
  return make_lattice("Boole", {"0", "1"}, {{"0", "1"}});
}

std::shared_ptr<const FiniteTableAlgebra> make_pentagon() {
  return make_lattice("PentagonN5", {"0", "p", "q", "r", "1"},
                      {{"0", "p"}, {"p", "q"}, {"q", "1"}, {"0", "r"}, {"r", "1"}});
}

std::shared_ptr<const FiniteTableAlgebra> make_hexagon() {
  return make_lattice(
      "Hexagon", {"0", "p", "q", "r", "s", "1"},
      {{"0", "p"}, {"p", "q"}, {"q", "1"}, {"0", "r"}, {"r", "s"}, {"s", "1"}});
}

std::shared_ptr<const FiniteTableAlgebra> make_diamond() {
  return make_lattice("Diamond", {"0", "a", "b", "1"},
                      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

std::shared_ptr<const FiniteTableAlgebra> make_b4() {
  OperationTables t;
  t.names = {"0", "1", "2", "3"};
  t.add = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}};
  t.mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 3}};
  t.zero = 0;
  t.one = 1;
  return std::make_shared<FiniteTableAlgebra>("B4", std::move(t));
}

std::shared_ptr<const FiniteTableAlgebra> make_b3prime() {
  OperationTables t;
  t.names = {"0'", "1'", "2'"};
  t.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}};
  t.zero = 0;
  t.one = 1;
  return std::make_shared<FiniteTableAlgebra>("B3prime", std::move(t));
}

std::shared_ptr<const FiniteTableAlgebra> make_trunc_fun(std::size_t m) {
  if (m == 0) throw InvalidArgument("TruncFun(m) needs m >= 1");
  // Element i lists f(1), ..., f(m) as base-(m+1) digits, f(1) most
  // significant; f(0) = 0 is implicit.
  const std::size_t base = m + 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (n > 4096 / base) throw InvalidArgument("TruncFun(m) carrier too large");
    n *= base;
  }
  auto decode = [&](std::size_t i) {
    std::vector<std::size_t> f(base, 0);
    for (std::size_t c = m; c >= 1; --c) {
      f[c] = i % base;
      i /= base;
    }
    return f;
  };
  auto encode = [&](const std::vector<std::size_t>& f) {
    std::size_t i = 0;
    for (std::size_t c = 1; c <= m; ++c) i = i * base + f[c];
    return i;
  };

  std::vector<std::vector<std::size_t>> fs(n);
  OperationTables t;
  for (std::size_t i = 0; i < n; ++i) {
    fs[i] = decode(i);
    std::string label = "[";
    for (std::size_t c = 0; c <= m; ++c) label += (c ? "," : "") + std::to_string(fs[i][c]);
    t.names.push_back(label + "]");
  }
  t.add.assign(n, std::vector<std::size_t>(n));
  t.mul.assign(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> h(base);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c <= m; ++c) h[c] = std::min(m, fs[i][c] + fs[j][c]);
      t.add[i][j] = encode(h);
      for (std::size_t c = 0; c <= m; ++c) h[c] = fs[i][fs[j][c]];
      t.mul[i][j] = encode(h);
    }
  }
  std::vector<std::size_t> id(base);
  for (std::size_t c = 0; c <= m; ++c) id[c] = c;
  t.zero = 0;
  t.one = encode(id);
  return std::make_shared<FiniteTableAlgebra>("TruncFun(" + std::to_string(m) + ")",
                                              std::move(t));
}

AlgebraPtr builtin(std::string_view name) {
  const std::string key = lower(name);
  if (key == "boole") return make_boole();
  if (key == "natplusmin") return std::make_shared<NatPlusMin>();
  if (key == "natplusplus") return std::make_shared<NatPlusPlus>();
  if (key == "pentagonn5" || key == "pentagon") return make_pentagon();
  if (key == "hexagon") return make_hexagon();
  if (key == "diamond") return make_diamond();
  if (key == "b4") return make_b4();
  if (key == "b3prime") return make_b3prime();
  if (key == "polymonome") return std::make_shared<PolyMonome>();
  if (key == "truncfun") return make_trunc_fun(2);
  if (key.rfind("truncfun(", 0) == 0 && key.back() == ')') {
    std::string_view digits(key);
    digits = digits.substr(9, digits.size() - 10);
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && m >= 1) {
      return make_trunc_fun(m);
    }
  }
  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw LookupError("unknown algebra '" + std::string(name) + "'; valid names: " + valid);
}

std::vector<std::string> builtin_names() {
  return {"Boole",  "NatPlusMin", "NatPlusPlus", "PentagonN5",  "Hexagon",
          "Diamond", "B4",        "B3prime",     "TruncFun(m)", "PolyMonome"};
}

std::vector<AlgebraPtr> bundled_finite_algebras() {
  return {make_boole(), make_pentagon(), make_hexagon(), make_diamond(),
          make_b4(),    make_b3prime(),  make_trunc_fun(2)};
}

}  // namespace sbwa
