// Copyright 2026 The Qmeter Authors
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

namespace qmeter {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

// A state, density operator, or distribution violating its construction
// invariants (normalization, hermiticity, stochasticity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidOperator : public Error {
 public:
  using Error::Error;
};

class InvalidDevice : public Error {
 public:
  using Error::Error;
};

class NotAnIsometry : public Error {
 public:
  NotAnIsometry(const std::string& what, double max_deviation)
      : Error(what), max_deviation_(max_deviation) {}

  double max_deviation() const { return max_deviation_; }

 private:
  double max_deviation_ = 0.0;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two algebraically equal routes disagreed beyond tolerance.
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace qmeter
