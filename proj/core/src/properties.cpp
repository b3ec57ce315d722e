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

#include "sbwa/properties.hpp"

#include <array>
#include <cctype>

#include "sbwa/error.hpp"

namespace sbwa {

namespace {

constexpr std::array kHierarchy = {
    Property::ZeroSumFree,       Property::StronglyZSF,
    Property::BiStronglyZSF,     Property::ZeroDivisorFree,
    Property::Positive,          Property::ZeroRightDistributive,
    Property::RightDistributive, Property::LeftDistributive,
    Property::Distributive,      Property::Commutative,
};

constexpr std::array kHalves = {
    Property::RunToInit,
    Property::InitToRun,
    Property::TreeRunToInit,
    Property::TreeInitToRun,
};

constexpr std::array kAllProperties = {
    Property::ZeroSumFree,       Property::StronglyZSF,
    Property::BiStronglyZSF,     Property::ZeroDivisorFree,
    Property::Positive,          Property::ZeroRightDistributive,
    Property::RightDistributive, Property::LeftDistributive,
    Property::Distributive,      Property::Commutative,
    Property::RunToInit,         Property::InitToRun,
    Property::TreeRunToInit,     Property::TreeInitToRun,
};

std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::string property_name(Property p) {
  switch (p) {
    case Property::ZeroSumFree: return "ZeroSumFree";
    case Property::StronglyZSF: return "StronglyZSF";
    case Property::BiStronglyZSF: return "BiStronglyZSF";
    case Property::ZeroDivisorFree: return "ZeroDivisorFree";
    case Property::Positive: return "Positive";
    case Property::ZeroRightDistributive: return "ZeroRightDistributive";
    case Property::RightDistributive: return "RightDistributive";
    case Property::LeftDistributive: return "LeftDistributive";
    case Property::Distributive: return "Distributive";
    case Property::Commutative: return "Commutative";
    case Property::RunToInit: return "RunToInit";
    case Property::InitToRun: return "InitToRun";
    case Property::TreeRunToInit: return "TreeRunToInit";
    case Property::TreeInitToRun: return "TreeInitToRun";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  const std::string key = normalize_name(name);
  for (Property p : kAllProperties) {
    if (normalize_name(property_name(p)) == key) return p;
  }
  throw LookupError("unknown property '" + std::string(name) + "'");
}

std::size_t property_arity(Property p) {
  switch (p) {
    case Property::ZeroSumFree:
    case Property::ZeroDivisorFree:
    case Property::Positive:
    case Property::Commutative:
      return 2;
    case Property::BiStronglyZSF:
    case Property::TreeRunToInit:
    case Property::TreeInitToRun:
      return 4;
    default:
      return 3;
  }
}

Property as_property(Half h) {
  switch (h) {
    case Half::RunToInit: return Property::RunToInit;
    case Half::InitToRun: return Property::InitToRun;
    case Half::TreeRunToInit: return Property::TreeRunToInit;
    case Half::TreeInitToRun: return Property::TreeInitToRun;
  }
  return Property::RunToInit;
}

std::span<const Property> hierarchy_properties() { return kHierarchy; }
std::span<const Property> half_properties() { return kHalves; }

bool satisfies(const Algebra& alg, Property p, std::span<const Weight> t) {
  if (t.size() != property_arity(p)) {
    throw InvalidArgument(property_name(p) + " takes " +
                          std::to_string(property_arity(p)) + " elements");
  }
  auto z = [&](const Weight& w) { return alg.is_zero(w); };
  auto eq = [&](const Weight& x, const Weight& y) { return alg.equal(x, y); };
  auto add = [&](const Weight& x, const Weight& y) { return alg.add(x, y); };
  auto mul = [&](const Weight& x, const Weight& y) { return alg.mul(x, y); };
  auto mul3 = [&](const Weight& x, const Weight& y, const Weight& w) {
    return mul(mul(x, y), w);
  };

  switch (p) {
    case Property::ZeroSumFree:
      return z(add(t[0], t[1])) == (z(t[0]) && z(t[1]));
    case Property::StronglyZSF:
      return z(mul(add(t[0], t[1]), t[2])) ==
             (z(mul(t[0], t[2])) && z(mul(t[1], t[2])));
    case Property::BiStronglyZSF:
      return z(mul3(t[0], add(t[1], t[2]), t[3])) ==
             (z(mul3(t[0], t[1], t[3])) && z(mul3(t[0], t[2], t[3])));
    case Property::ZeroDivisorFree:
      return z(mul(t[0], t[1])) == (z(t[0]) || z(t[1]));
    case Property::Positive:
      return satisfies(alg, Property::ZeroSumFree, t) &&
             satisfies(alg, Property::ZeroDivisorFree, t);
    case Property::ZeroRightDistributive:
      return z(mul(add(t[0], t[1]), t[2])) ==
             z(add(mul(t[0], t[2]), mul(t[1], t[2])));
    case Property::RightDistributive:
      return eq(mul(add(t[0], t[1]), t[2]), add(mul(t[0], t[2]), mul(t[1], t[2])));
    case Property::LeftDistributive:
      return eq(mul(t[0], add(t[1], t[2])), add(mul(t[0], t[1]), mul(t[0], t[2])));
    case Property::Distributive:
      return satisfies(alg, Property::RightDistributive, t) &&
             satisfies(alg, Property::LeftDistributive, t);
    case Property::Commutative:
      return eq(mul(t[0], t[1]), mul(t[1], t[0]));
    case Property::RunToInit:
      return z(mul(t[0], t[2])) || !z(mul(add(t[0], t[1]), t[2]));
    case Property::InitToRun:
      return z(mul(add(t[0], t[1]), t[2])) || !z(mul(t[0], t[2])) ||
             !z(mul(t[1], t[2]));
    case Property::TreeRunToInit:
      return z(mul3(t[0], t[1], t[3])) || !z(mul3(t[0], add(t[1], t[2]), t[3]));
    case Property::TreeInitToRun:
      return z(mul3(t[0], add(t[1], t[2]), t[3])) ||
             !z(mul3(t[0], t[1], t[3])) || !z(mul3(t[0], t[2], t[3]));
  }
  return true;
}

PropertyVerdict check(const Algebra& alg, Property p) {
  const auto els = alg.elements();
  const std::size_t arity = property_arity(p);
  PropertyVerdict verdict{p, true, {}};
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Weight> tuple(arity);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = els[idx[i]];
    if (!satisfies(alg, p, tuple)) {
      verdict.holds = false;
      verdict.witness = tuple;
      return verdict;
    }
    std::size_t pos = arity;
    while (true) {
      --pos;
      if (++idx[pos] < els.size()) break;
      idx[pos] = 0;
      if (pos == 0) return verdict;
    }
  }
}

PropertyVerdict check_half(const Algebra& alg, Half h) {
  return check(alg, as_property(h));
}

const PropertyVerdict& PropertyReport::get(Property p) const {
  for (const auto& v : verdicts) {
    if (v.property == p) return v;
  }
  for (const auto& v : halves) {
    if (v.property == p) return v;
  }
  throw LookupError("property " + property_name(p) + " not in report");
}

PropertyReport classify(const Algebra& alg) {
  PropertyReport report;
  report.algebra = alg.name();
  for (Property p : kHierarchy) report.verdicts.push_back(check(alg, p));
  for (Property p : kHalves) report.halves.push_back(check(alg, p));

  auto h = [&](Property p) { return report.holds(p); };
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      throw InternalLogicError("inconsistent verdicts for " + alg.name() + ": " + what);
    }
  };
  require(!h(Property::Positive) || h(Property::BiStronglyZSF),
          "positive but not bi-strongly zero-sum-free");
  require(!h(Property::BiStronglyZSF) || h(Property::StronglyZSF),
          "bi-strongly but not strongly zero-sum-free");
  require(!h(Property::StronglyZSF) || h(Property::ZeroSumFree),
          "strongly zero-sum-free but not zero-sum-free");
  require(h(Property::StronglyZSF) ==
              (h(Property::ZeroSumFree) && h(Property::ZeroRightDistributive)),
          "strongly zero-sum-free differs from zsf and zero-right-distributive");
  require(!h(Property::RightDistributive) || h(Property::ZeroRightDistributive),
          "right-distributive but not zero-right-distributive");
  require(!(h(Property::Commutative) && h(Property::StronglyZSF)) ||
              h(Property::BiStronglyZSF),
          "commutative and strongly but not bi-strongly zero-sum-free");
  require(h(Property::StronglyZSF) ==
              (h(Property::RunToInit) && h(Property::InitToRun)),
          "strongly zero-sum-free differs from the conjunction of its halves");
  require(h(Property::BiStronglyZSF) ==
              (h(Property::TreeRunToInit) && h(Property::TreeInitToRun)),
          "bi-strongly zero-sum-free differs from the conjunction of its halves");
  require(h(Property::Distributive) ==
              (h(Property::RightDistributive) && h(Property::LeftDistributive)),
          "distributive differs from right and left distributive");
  return report;
}

}  // namespace sbwa
