// Copyright 2026 The zdsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZDSOLVE_ERRORS_HPP_
#define ZDSOLVE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or system text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The input violates a documented precondition (shape, sign, range).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An elimination polynomial vanished identically, or the system has
/// infinitely many (projective) solutions.
class PositiveDimensionalError : public Error {
 public:
  using Error::Error;
};

/// A projected value has no preimage on the grid it is lifted against.
class NoPreimageError : public Error {
 public:
  NoPreimageError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A refinement or certification step could not reach its target.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace zds

#endif  // ZDSOLVE_ERRORS_HPP_
