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

#ifndef SBWA_COUNTING_HPP_
#define SBWA_COUNTING_HPP_

#include <cstdint>
#include <memory>

#include "sbwa/algebra.hpp"

namespace sbwa {

struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  bool operator==(const OpCounts&) const = default;
};

/// Delegates to an inner algebra and counts add/mul invocations.
/// Not thread-safe: use one wrapper per thread and merge counts afterwards.
class CountingAlgebra final : public Algebra {
 public:
  explicit CountingAlgebra(AlgebraPtr inner) : inner_(std::move(inner)) {}

  std::string name() const override { return inner_->name(); }
  Weight zero() const override { return inner_->zero(); }
  Weight one() const override { return inner_->one(); }
  Weight add(const Weight& a, const Weight& b) const override {
    ++counts_.adds;
    return inner_->add(a, b);
  }
  Weight mul(const Weight& a, const Weight& b) const override {
    ++counts_.muls;
    return inner_->mul(a, b);
  }
  bool equal(const Weight& a, const Weight& b) const override {
    return inner_->equal(a, b);
  }
  std::string describe(const Weight& w) const override {
    return inner_->describe(w);
  }
  Weight parse(std::string_view label) const override {
    return inner_->parse(label);
  }
  bool is_finite() const override { return inner_->is_finite(); }
  std::vector<Weight> elements() const override { return inner_->elements(); }

  void reset_counts() { counts_ = {}; }
  OpCounts read_counts() const { return counts_; }
  const AlgebraPtr& inner() const { return inner_; }

 private:
  AlgebraPtr inner_;
  mutable OpCounts counts_;
};

std::shared_ptr<CountingAlgebra> wrap_counting(AlgebraPtr alg);

}  // namespace sbwa

#endif  // SBWA_COUNTING_HPP_
