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

#include <algorithm>
#include <string>

#include "qinst/error.hpp"
#include "qinst/passes/retarget.hpp"

namespace qinst::passes {

std::vector<ir::Circuit> build_templates(std::array<int, 2> pair,
                                         const ir::GateSet& target, int n,
                                         int num_qubits) {
  if (n < 0) {
    throw ConfigError("template depth must be non-negative, got " +
                      std::to_string(n));
  }
  const ir::Gate& single = target.single_qubit_gate();
  const std::vector<double> zeros(single.num_params(), 0.0);
  auto layer = [&](std::vector<ir::Operation>& ops) {
    ops.emplace_back(single, ir::Location{pair[0]}, zeros);
    ops.emplace_back(single, ir::Location{pair[1]}, zeros);
  };
  auto make = [&](const ir::Gate* gate, int k) {
    std::vector<ir::Operation> ops;
    layer(ops);
    for (int i = 0; i < k; ++i) {
      ops.emplace_back(*gate, ir::Location{pair[0], pair[1]},
                       std::vector<double>(gate->num_params(), 0.0));
      layer(ops);
    }
    return ir::Circuit(num_qubits, std::move(ops));
  };

  std::vector<ir::Circuit> out;
  out.push_back(make(nullptr, 0));
  for (int k = 1; k <= n; ++k) {
    for (const auto& entry : target.two_qubit_gates()) {
      if (k <= entry.max_depth) out.push_back(make(&entry.gate, k));
    }
  }
  return out;
}

}  // namespace qinst::passes
