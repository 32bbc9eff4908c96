// Copyright 2026 The gsynth developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gsynth {

/// Requested object exceeds a configured size cap (e.g. dense backend qubit limit).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A conversion produced a state that fails its verification pass.
class ConversionMismatchError : public std::runtime_error {
 public:
  explicit ConversionMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text input (QASM, JSON, tableau dump) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = -1, int column = -1)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line < 0) return msg;
    std::string s = msg + " at line " + std::to_string(line);
    if (column >= 0) s += ", column " + std::to_string(column);
    return s;
  }
  int line_;
  int column_;
};

/// A circuit violates the physical-constraint rules.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gsynth
