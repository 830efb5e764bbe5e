// Copyright 2026 The gbmodal Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gbm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (formulas, frame and algebra files).
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A structure violates a mathematical precondition (non-reflexive E,
/// incompatible relation, non-lattice order, non-normal operator, ...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gbm
