// Copyright 2026 The qinst Authors
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

namespace qinst {

/** Base class of every error thrown by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Wrong number of parameters or qubits for a gate. */
class ArityError : public Error {
 public:
  using Error::Error;
};

/** A unitary would exceed the materialisation cap. */
class CapacityError : public Error {
 public:
  using Error::Error;
};

/** Index outside a circuit's op list or qubit range. */
class BoundsError : public Error {
 public:
  using Error::Error;
};

/** Matrix dimensions do not agree. */
class ShapeError : public Error {
 public:
  using Error::Error;
};

/** Input matrix is not unitary within tolerance. */
class UnitarityError : public Error {
 public:
  using Error::Error;
};

/** Invalid configuration value (threshold, multistart count, ...). */
class ConfigError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

/** Blocks of a partition claim the same original op. */
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/** No template reached the threshold for some interaction region. */
class RetargetError : public Error {
 public:
  using Error::Error;
};

/** Verification sections whose original and compiled halves do not line up. */
class PairingError : public Error {
 public:
  using Error::Error;
};

class EmitError : public Error {
 public:
  using Error::Error;
};

/** Malformed or unsupported QASM input, with a 1-based position. */
class QasmError : public Error {
 public:
  QasmError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ParseError : public QasmError {
 public:
  using QasmError::QasmError;
};

/** Valid QASM that uses a statement or gate outside the supported subset. */
class UnsupportedError : public QasmError {
 public:
  using QasmError::QasmError;
};

/** A file could not be read or written. */
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qinst
