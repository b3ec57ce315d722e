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

#include "sbwa/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sbwa/error.hpp"

namespace sbwa {

Polynomial::Polynomial(std::vector<Natural> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw InvalidArgument("polynomial coefficients must be nonnegative");
  }
  normalize();
}

Polynomial Polynomial::constant(Natural c) {
  return Polynomial(std::vector<Natural>{std::move(c)});
}

Polynomial Polynomial::monomial(Natural c, std::size_t degree) {
  std::vector<Natural> coeffs(degree + 1, Natural(0));
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_monome() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(),
                       [](const Natural& c) { return c != 0; }) <= 1;
}

Natural Polynomial::at_zero() const {
  return coeffs_.empty() ? Natural(0) : coeffs_.front();
}

Natural Polynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Natural(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Natural> out(std::max(coeffs_.size(), other.coeffs_.size()),
                           Natural(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Natural> out(coeffs_.size() + other.coeffs_.size() - 1, Natural(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Natural& c) const {
  std::vector<Natural> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Natural& c = coeffs_[d];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("invalid polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty text");

  Polynomial result;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t end = s.find('+', i);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(i, end - i);
    if (term.empty()) throw fail("empty term");

    std::size_t x = term.find('x');
    Natural coeff = 1;
    std::size_t degree = 0;
    std::string digits = x == std::string::npos ? term : term.substr(0, x);
    if (!digits.empty()) {
      if (!std::all_of(digits.begin(), digits.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw fail("bad coefficient '" + digits + "'");
      }
      coeff = Natural(digits);
    } else if (x == std::string::npos) {
      throw fail("empty term");
    }
    if (x != std::string::npos) {
      std::string rest = term.substr(x + 1);
      if (rest.empty()) {
        degree = 1;
      } else {
        if (rest.size() < 2 || rest[0] != '^' ||
            !std::all_of(rest.begin() + 1, rest.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw fail("bad exponent in '" + term + "'");
        }
        degree = std::stoul(rest.substr(1));
      }
    }
    result = result + monomial(coeff, degree);
    if (end == s.size()) break;
    i = end + 1;
  }
  return result;
}

}  // namespace sbwa
