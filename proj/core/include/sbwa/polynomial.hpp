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

#ifndef SBWA_POLYNOMIAL_HPP_
#define SBWA_POLYNOMIAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sbwa {

using Natural = boost::multiprecision::cpp_int;

/// Polynomial in one variable with nonnegative integer coefficients.
/// coefficients()[d] is the coefficient of x^d; there are never trailing
/// zeros, so the zero polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Natural> coefficients);

  static Polynomial constant(Natural c);
  static Polynomial monomial(Natural c, std::size_t degree);

  const std::vector<Natural>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// At most one nonzero coefficient (the zero polynomial counts).
  bool is_monome() const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Natural at_zero() const;
  Natural coefficient(std::size_t d) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Natural& c) const;

  bool operator==(const Polynomial&) const = default;

  /// "0", "1", "x", "2+3x^2" (ascending degree).
  std::string to_string() const;
  /// Inverse of to_string; also accepts whitespace and terms in any order.
  static Polynomial parse(std::string_view text);

 private:
  void normalize();
  std::vector<Natural> coeffs_;
};

}  // namespace sbwa

#endif  // SBWA_POLYNOMIAL_HPP_
