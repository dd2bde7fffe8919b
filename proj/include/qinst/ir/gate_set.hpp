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
#include <vector>

#include "qinst/ir/gate.hpp"

namespace qinst::ir {

/// Default cap on two-qubit gates per replacement template.
inline constexpr int kDefaultTemplateDepth = 3;

/**
 * A retargeting gate-set: one or more two-qubit gates, each with its own cap
 * on template depth, plus the single-qubit gate used to fill templates.
 */
class GateSet {
 public:
  struct Entry {
    Gate gate;
    int max_depth = kDefaultTemplateDepth;
  };

  /// Throws ConfigError on an empty list, a gate that is not two-qubit, a
  /// non-positive depth, or a single-qubit gate of the wrong arity.
  GateSet(std::vector<Entry> two_qubit_gates, Gate single_qubit_gate);
  explicit GateSet(std::vector<Entry> two_qubit_gates);

  /// Every two-qubit gate at the default depth, filled with U3.
  static GateSet of(std::vector<Gate> two_qubit_gates);

  const std::vector<Entry>& two_qubit_gates() const { return entries_; }
  const Gate& single_qubit_gate() const { return single_; }

  bool contains_two_qubit(const Gate& g) const;
  /// True when g is in the set: a listed two-qubit gate or the fill gate.
  bool contains(const Gate& g) const;

  std::string describe() const;

 private:
  std::vector<Entry> entries_;
  Gate single_;
};

}  // namespace qinst::ir
