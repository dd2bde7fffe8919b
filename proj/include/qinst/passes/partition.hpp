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
#include <span>
#include <vector>

#include "qinst/ir/circuit.hpp"

namespace qinst::passes {

/**
 * A sub-circuit over a few qubits. `location` lists the global qubits in
 * ascending order; local qubit i of `circuit` is global qubit location[i].
 * `span` holds the sorted indices of the original ops the block owns.
 *
 * `sort_keys` assigns each op of `circuit` a position in the original op
 * order. reassemble() uses it to interleave blocks; partition() fills it with
 * `span`, and passes that only remove ops keep the surviving entries. It may
 * be left empty for rewritten blocks.
 */
struct Block {
  std::vector<int> location;
  ir::Circuit circuit;
  std::vector<std::size_t> span;
  std::vector<std::size_t> sort_keys;
};

struct Partition {
  int num_qubits = 0;
  std::vector<Block> blocks;
};

/**
 * Greedy left-to-right grouping of items with small qubit supports into
 * groups spanning at most max_width qubits. Several groups stay open at once;
 * an item joins an open group when no newer group has claimed any of its
 * qubits and the union still fits, preferring the group that shares the most
 * qubits, then the newest. Single-qubit items on qubits no group has claimed
 * yet wait for the next multi-qubit item on that qubit.
 *
 * Returns sorted item indices per group. Groups are listed in creation order,
 * which is a valid execution order: on every qubit, group ids never decrease
 * along the original item order. Throws PartitionError when an item is wider
 * than max_width.
 */
std::vector<std::vector<std::size_t>> group_by_support(
    std::span<const std::vector<int>> supports, int num_qubits, int max_width);

/// Throws PartitionError if block_size < 2 or an op is wider than block_size.
Partition partition(const ir::Circuit& circuit, int block_size);

/**
 * Rebuilds the global circuit. Blocks are merged so that every qubit sees
 * its blocks in list order; among the ops that are ready, the one with the
 * smallest sort key goes first. For an untouched partition this reproduces
 * the original circuit op for op.
 *
 * `origin`, when given, receives the block index of every output op.
 * Throws ConsistencyError when two blocks claim the same original op or a
 * block's circuit does not fit its location.
 */
ir::Circuit reassemble(const Partition& partition,
                       std::vector<std::size_t>* origin = nullptr);

/// Extracts the ops at `indices` onto the local qubits of `location`.
ir::Circuit extract(const ir::Circuit& circuit,
                    std::span<const std::size_t> indices,
                    std::span<const int> location);

}  // namespace qinst::passes
