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

#include "sbwa/semantics.hpp"

#include <algorithm>
#include <cctype>

#include "sbwa/error.hpp"

namespace sbwa {

std::string semantics_name(Semantics s) { return s == Semantics::Run ? "run" : "init"; }

Semantics parse_semantics(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "run") return Semantics::Run;
  if (lower == "init" || lower == "initial") return Semantics::Init;
  throw ParseError("unknown semantics '" + std::string(name) + "' (expected run or init)");
}

}  // namespace sbwa
