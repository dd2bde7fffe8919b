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

#include <array>
#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/gate_set.hpp"
#include "qinst/numerics/instantiate.hpp"
#include "qinst/passes/blocks.hpp"

namespace qinst::passes {

struct RetargetConfig {
  explicit RetargetConfig(ir::GateSet target) : target(std::move(target)) {}

  ir::GateSet target;
  /// Cap on two-qubit gates per template, applied on top of each gate's own
  /// depth in the gate set.
  int max_block_gates = ir::kDefaultTemplateDepth;
  double epsilon = numerics::kDefaultThreshold;
  numerics::InstantiationConfig instantiation;

  /// Throws ConfigError on epsilon <= 0, max_block_gates < 0 or a bad
  /// instantiation config.
  void validate() const;
};

struct RetargetResult {
  ir::Circuit circuit{0};
  /// Distance between the output and input unitaries.
  double distance = 0.0;
  /// Interaction regions that were replaced.
  int regions = 0;
  int attempts = 0;
};

/**
 * Candidate replacements for an interaction on `pair` in a circuit of
 * num_qubits qubits: a single-qubit layer, then k repetitions of a target
 * two-qubit gate followed by another single-qubit layer. k = 0 appears once;
 * for k >= 1 there is one template per gate whose depth allows it. Templates
 * are ordered by k, then by the gate order of the set. Parameters start at 0.
 */
std::vector<ir::Circuit> build_templates(std::array<int, 2> pair,
                                         const ir::GateSet& target, int n,
                                         int num_qubits = 2);

/**
 * Rewrites the circuit into the target gate set. Repeatedly takes the first
 * interaction region holding a two-qubit gate outside the set, substitutes
 * each template for it and instantiates the whole candidate against the
 * input unitary. The accepted candidate is the first success with the fewest
 * two-qubit gates. Remaining single-qubit gates outside the set are then
 * rewritten one by one.
 *
 * Throws RetargetError naming the region when no template reaches epsilon.
 */
RetargetResult retarget(const ir::Circuit& circuit, const RetargetConfig& config);

/// Partitioned form of retarget(); see delete_gates_partitioned().
PartitionedResult retarget_partitioned(const ir::Circuit& circuit,
                                       int block_size,
                                       const RetargetConfig& config,
                                       int jobs = 0);

}  // namespace qinst::passes
