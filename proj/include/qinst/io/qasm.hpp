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

#include <string>
#include <string_view>
#include <vector>

#include "qinst/ir/circuit.hpp"

namespace qinst::io {

enum class TokenKind {
  identifier,
  real,
  integer,
  string,
  symbol,  // one of ; , ( ) [ ] { } + - * / ^ and ->
  end,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

/// Splits QASM source into tokens, dropping whitespace and // comments.
/// Throws ParseError on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

/**
 * Parses the OpenQASM 2.0 subset: qreg/creg declarations, include of
 * qelib1.inc, opaque declarations of registry gates, and applications of
 * u3/u2/u1/u/U/p, rx/ry/rz, x/y/z/h/s/sdg/t/tdg/sx/id, cx/CX/cz/rzz/rxx and
 * syc/sqisw/xx/zz. Registers are flattened in declaration order; whole
 * registers broadcast. Phase-type gates become U3 ops.
 *
 * Throws ParseError on malformed input and UnsupportedError on statements
 * outside the subset (measure, reset, barrier, if, gate bodies, ...), both
 * carrying the line and column.
 */
ir::Circuit parse_qasm(std::string_view text);

/// Writes OPENQASM 2.0 with parameters at 12 significant digits. Vendor
/// gates get opaque declarations. Throws EmitError for unregistered gates.
std::string emit_qasm(const ir::Circuit& circuit);

/// Throw IoError when the file cannot be opened.
ir::Circuit read_qasm_file(const std::string& path);
void write_qasm_file(const std::string& path, const ir::Circuit& circuit);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace qinst::io
