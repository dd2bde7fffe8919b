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

#include <cstddef>
#include <optional>
#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/numerics/instantiate.hpp"
#include "qinst/passes/blocks.hpp"

namespace qinst::passes {

struct DeleteConfig {
  /// A removal is kept when the re-instantiated circuit is within epsilon of
  /// the input unitary.
  double epsilon = numerics::kDefaultThreshold;
  /// Unbounded when empty.
  std::optional<int> max_sweeps;
  numerics::InstantiationConfig instantiation;

  /// Throws ConfigError on epsilon <= 0, max_sweeps < 1 or a bad
  /// instantiation config.
  void validate() const;
};

struct DeleteResult {
  ir::Circuit circuit{0};
  /// For each surviving op, its index in the input.
  std::vector<std::size_t> kept;
  /// Distance between the output and input unitaries.
  double distance = 0.0;
  int sweeps = 0;
  int attempts = 0;
};

/**
 * Scanning gate removal. Each sweep walks the ops in order, drops one,
 * re-instantiates the rest against the input unitary (warm-started at their
 * current parameters) and keeps the removal when the distance is at most
 * epsilon. A parameterless gate that cannot be removed alone is retried
 * together with the next op on the same qubits. Sweeps repeat until one
 * removes nothing or max_sweeps is reached.
 *
 * The input must be small enough to materialise.
 */
DeleteResult delete_gates(const ir::Circuit& circuit, const DeleteConfig& config);

/**
 * Partitions into blocks of at most block_size qubits, runs delete_gates on
 * each block against its own unitary and reassembles. Blocks run on up to
 * `jobs` threads (all available when jobs <= 0); the result does not depend
 * on the thread count.
 */
PartitionedResult delete_gates_partitioned(const ir::Circuit& circuit,
                                           int block_size,
                                           const DeleteConfig& config,
                                           int jobs = 0);

}  // namespace qinst::passes
