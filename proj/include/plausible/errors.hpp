// Copyright 2026 The plausible Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plausible {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An unconditional measure has a value outside its domain's carrier,
/// or its weights are not normalized.
class MalformedMeasure : public Error {
 public:
  using Error::Error;
};

/// A conditional space whose definedness pattern is inconsistent:
/// Pl(U|V) must be defined for all U exactly when V is conditionable.
class MalformedCps : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (overlapping variable sets,
/// events over different universes, oversized inputs, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Pl(U|V) was requested for a V outside the conditioning family.
class UndefinedConditional : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Invalid domain setup, e.g. a plp domain over an empty index set, or a
/// domain lacking the division solver where one is needed.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// oplus/otimes were asked for a result that is not an element of D.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The division solver failed on a pair the reconstruction requires. This
/// points at a broken domain definition, not at bad network data.
class DomainViolatesBn5 : public Error {
 public:
  using Error::Error;
};

/// A literal (rational, rank, plp vector, ...) could not be parsed.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a measure, network or query text, with a 1-based
/// position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace plausible
