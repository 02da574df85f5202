// Copyright 2026 The Planar Control Authors
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

#ifndef PLANAR_COMMON_ERROR_H_
#define PLANAR_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace planar {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an API contract (wrong shape, step after LAST, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameters, e.g. a negative tolerance margin.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A requested feature is not available for this configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unknown name or index in a registry.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Malformed model document. Carries the 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The simulation produced a non-finite state.
class SimulationDivergence : public Error {
 public:
  using Error::Error;
};

// A linear system that should be positive definite was not (e.g. a body
// tree without mass on some dof).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An iterative solver failed to converge.
class SolverError : public Error {
 public:
  SolverError(const std::string& message, double residual)
      : Error(message + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

// A model cannot be handled by the requested algorithm.
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace planar

#endif  // PLANAR_COMMON_ERROR_H_
