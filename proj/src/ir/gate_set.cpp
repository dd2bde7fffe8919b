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

#include "qinst/ir/gate_set.hpp"

#include "qinst/error.hpp"

namespace qinst::ir {

GateSet::GateSet(std::vector<Entry> two_qubit_gates, Gate single_qubit_gate)
    : entries_(std::move(two_qubit_gates)), single_(std::move(single_qubit_gate)) {
  if (entries_.empty()) {
    throw ConfigError("gate-set needs at least one two-qubit gate");
  }
  for (const auto& e : entries_) {
    if (e.gate.arity() != 2) {
      throw ConfigError("gate-set entry '" + e.gate.name() +
                        "' is not a two-qubit gate");
    }
    if (e.max_depth <= 0) {
      throw ConfigError("template depth for '" + e.gate.name() +
                        "' must be positive");
    }
  }
  if (single_.arity() != 1) {
    throw ConfigError("gate-set fill gate '" + single_.name() +
                      "' is not a single-qubit gate");
  }
}

GateSet::GateSet(std::vector<Entry> two_qubit_gates)
    : GateSet(std::move(two_qubit_gates), gates::u3()) {}

GateSet GateSet::of(std::vector<Gate> two_qubit_gates) {
  std::vector<Entry> entries;
  for (auto& g : two_qubit_gates) entries.push_back({std::move(g)});
  return GateSet(std::move(entries));
}

bool GateSet::contains_two_qubit(const Gate& g) const {
  for (const auto& e : entries_) {
    if (e.gate == g) return true;
  }
  return false;
}

bool GateSet::contains(const Gate& g) const {
  return g == single_ || contains_two_qubit(g);
}

std::string GateSet::describe() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ",";
    out += e.gate.name();
  }
  return out + " + " + single_.name();
}

}  // namespace qinst::ir
