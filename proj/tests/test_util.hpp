#ifndef SBWA_TESTS_TEST_UTIL_HPP_
#define SBWA_TESTS_TEST_UTIL_HPP_

#include <string>
#include <vector>

#include "sbwa/algebra.hpp"
#include "sbwa/builtin.hpp"
#include "sbwa/table_algebra.hpp"

namespace sbwa::testing {

inline Weight el(const Algebra& alg, const std::string& label) { return alg.parse(label); }

inline std::vector<std::string> labels(const Algebra& alg, const std::vector<Weight>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(alg.describe(w));
  return out;
}

// Raw tables of a finite algebra, for oracles that bypass Algebra::add/mul.
struct RawTables {
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t zero;
  std::size_t one;
  std::size_t n() const { return add.size(); }
};

inline RawTables raw(const AlgebraPtr& alg) {
  const auto& t = dynamic_cast<const FiniteTableAlgebra&>(*alg).tables();
  return RawTables{t.add, t.mul, t.zero, t.one};
}

}  // namespace sbwa::testing

#endif  // SBWA_TESTS_TEST_UTIL_HPP_
