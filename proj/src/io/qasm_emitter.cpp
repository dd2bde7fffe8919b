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

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qinst/error.hpp"
#include "qinst/io/qasm.hpp"

namespace qinst::io {
namespace {

// Gates outside qelib1.inc, declared opaque on output.
const std::set<std::string>& vendor_gates() {
  static const std::set<std::string> names{"xx", "zz", "sqisw", "syc"};
  return names;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string emit_qasm(const ir::Circuit& circuit) {
  std::set<std::string> used_vendor;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& gate = circuit.op(i).gate;
    const auto known = ir::gates::lookup(gate.name());
    if (!known || !(*known == gate)) {
      throw EmitError("op " + std::to_string(i) + " uses unregistered gate '" +
                      gate.name() + "'");
    }
    if (vendor_gates().count(gate.name())) used_vendor.insert(gate.name());
  }

  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  for (const auto& name : used_vendor) out << "opaque " << name << " a,b;\n";
  if (circuit.num_qubits() > 0) out << "qreg q[" << circuit.num_qubits() << "];\n";
  for (const auto& op : circuit.ops()) {
    out << op.gate.name();
    if (!op.params.empty()) {
      out << '(';
      for (std::size_t k = 0; k < op.params.size(); ++k) {
        if (k) out << ',';
        out << format_param(op.params[k]);
      }
      out << ')';
    }
    for (int k = 0; k < op.location.size(); ++k) {
      out << (k ? "," : " ") << "q[" << op.location[k] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

ir::Circuit read_qasm_file(const std::string& path) {
  return parse_qasm(read_text_file(path));
}

void write_qasm_file(const std::string& path, const ir::Circuit& circuit) {
  write_text_file(path, emit_qasm(circuit));
}

}  // namespace qinst::io
