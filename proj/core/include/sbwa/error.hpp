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

#ifndef SBWA_ERROR_HPP_
#define SBWA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sbwa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (algebra tables, automaton files, words, trees).
/// The message names the source and the location of the problem.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unknown builtin algebra, symbol, state or element name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Attempt to enumerate the carrier of an infinite algebra.
class EnumerationError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid object: out-of-range table index, run/word length
/// mismatch, invalid cut, and similar.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Violated operation precondition (index out of range, rank too small, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when computed results contradict facts that must hold; always an
/// implementation bug, never a valid outcome.
class InternalLogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbwa

#endif  // SBWA_ERROR_HPP_
