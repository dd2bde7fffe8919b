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

#include "qinst/passes/partition.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qinst/error.hpp"

namespace qinst::passes {
namespace {

struct OpenGroup {
  std::vector<int> qubits;  // sorted
  std::vector<std::size_t> items;
};

bool has(const std::vector<int>& sorted, int q) {
  return std::binary_search(sorted.begin(), sorted.end(), q);
}

void add_qubit(std::vector<int>& sorted, int q) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), q);
  if (it == sorted.end() || *it != q) sorted.insert(it, q);
}

}  // namespace

std::vector<std::vector<std::size_t>> group_by_support(
    std::span<const std::vector<int>> supports, int num_qubits, int max_width) {
  std::vector<OpenGroup> groups;
  std::vector<int> owner(num_qubits, -1);
  std::vector<std::vector<std::size_t>> pending(num_qubits);
  std::vector<int> open;

  auto absorb = [&](int g, std::size_t item, const std::vector<int>& support) {
    for (int q : support) {
      if (owner[q] < 0 && !pending[q].empty()) {
        groups[g].items.insert(groups[g].items.end(), pending[q].begin(),
                               pending[q].end());
        pending[q].clear();
      }
      add_qubit(groups[g].qubits, q);
      owner[q] = g;
    }
    groups[g].items.push_back(item);
  };

  for (std::size_t i = 0; i < supports.size(); ++i) {
    const auto& support = supports[i];
    if (support.empty()) {
      throw PartitionError("item " + std::to_string(i) + " acts on no qubits");
    }
    if (static_cast<int>(support.size()) > max_width) {
      throw PartitionError("op " + std::to_string(i) + " acts on " +
                           std::to_string(support.size()) +
                           " qubits, more than the block size " +
                           std::to_string(max_width));
    }
    for (int q : support) {
      if (q < 0 || q >= num_qubits) {
        throw PartitionError("op " + std::to_string(i) + " uses qubit " +
                             std::to_string(q) + " out of range");
      }
    }
    if (support.size() == 1 && owner[support[0]] < 0) {
      pending[support[0]].push_back(i);
      continue;
    }

    // Drop groups whose every qubit has been claimed by a newer group.
    std::erase_if(open, [&](int g) {
      return std::all_of(groups[g].qubits.begin(), groups[g].qubits.end(),
                         [&](int q) { return owner[q] > g; });
    });

    int best = -1;
    int best_overlap = -1;
    for (int g : open) {
      const auto& qubits = groups[g].qubits;
      int overlap = 0;
      bool eligible = true;
      for (int q : support) {
        if (owner[q] > g) {
          eligible = false;
          break;
        }
        overlap += has(qubits, q) ? 1 : 0;
      }
      const int width =
          static_cast<int>(qubits.size() + support.size()) - overlap;
      if (!eligible || width > max_width) continue;
      if (overlap >= best_overlap) {
        best = g;
        best_overlap = overlap;
      }
    }
    if (best < 0) {
      best = static_cast<int>(groups.size());
      groups.emplace_back();
      open.push_back(best);
    }
    absorb(best, i, support);
  }

  // Qubits that only ever saw single-qubit items join the newest group with
  // room, or start a group of their own.
  for (int q = 0; q < num_qubits; ++q) {
    if (pending[q].empty()) continue;
    int target = -1;
    for (int g = static_cast<int>(groups.size()) - 1; g >= 0; --g) {
      if (static_cast<int>(groups[g].qubits.size()) < max_width) {
        target = g;
        break;
      }
    }
    if (target < 0) {
      target = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[target].items.insert(groups[target].items.end(), pending[q].begin(),
                                pending[q].end());
    add_qubit(groups[target].qubits, q);
    owner[q] = target;
  }

  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    std::sort(g.items.begin(), g.items.end());
    out.push_back(std::move(g.items));
  }
  return out;
}

ir::Circuit extract(const ir::Circuit& circuit,
                    std::span<const std::size_t> indices,
                    std::span<const int> location) {
  std::vector<int> local(circuit.num_qubits(), -1);
  for (std::size_t i = 0; i < location.size(); ++i) local[location[i]] = i;
  std::vector<ir::Operation> ops;
  ops.reserve(indices.size());
  for (std::size_t idx : indices) {
    const auto& op = circuit.op(idx);
    std::vector<int> qubits;
    for (int q : op.location) {
      if (local[q] < 0) {
        throw PartitionError("op " + std::to_string(idx) +
                             " reaches outside its block location");
      }
      qubits.push_back(local[q]);
    }
    ops.emplace_back(op.gate, ir::Location(std::span<const int>(qubits)),
                     op.params);
  }
  return ir::Circuit(static_cast<int>(location.size()), std::move(ops));
}

Partition partition(const ir::Circuit& circuit, int block_size) {
  if (block_size < 2) {
    throw PartitionError("block size must be at least 2, got " +
                         std::to_string(block_size));
  }
  std::vector<std::vector<int>> supports;
  supports.reserve(circuit.size());
  for (const auto& op : circuit.ops()) {
    supports.emplace_back(op.location.begin(), op.location.end());
  }
  Partition out;
  out.num_qubits = circuit.num_qubits();
  for (auto& items : group_by_support(supports, circuit.num_qubits(), block_size)) {
    std::vector<int> location;
    for (std::size_t idx : items) {
      for (int q : circuit.op(idx).location) add_qubit(location, q);
    }
    Block block{location, extract(circuit, items, location), items, items};
    out.blocks.push_back(std::move(block));
  }
  return out;
}

ir::Circuit reassemble(const Partition& partition,
                       std::vector<std::size_t>* origin) {
  const int n = partition.num_qubits;
  const auto& blocks = partition.blocks;

  std::vector<int> claimed;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.circuit.num_qubits() != static_cast<int>(block.location.size())) {
      throw ConsistencyError("block " + std::to_string(b) + " has a " +
                             std::to_string(block.circuit.num_qubits()) +
                             "-qubit circuit on " +
                             std::to_string(block.location.size()) + " qubits");
    }
    for (int q : block.location) {
      if (q < 0 || q >= n) {
        throw ConsistencyError("block " + std::to_string(b) +
                               " uses qubit " + std::to_string(q) +
                               " out of range");
      }
    }
    for (std::size_t idx : block.span) {
      if (idx >= claimed.size()) claimed.resize(idx + 1, -1);
      if (claimed[idx] >= 0) {
        throw ConsistencyError("op " + std::to_string(idx) +
                               " is claimed by blocks " +
                               std::to_string(claimed[idx]) + " and " +
                               std::to_string(b));
      }
      claimed[idx] = static_cast<int>(b);
    }
  }

  // Per-qubit queues of blocks with ops on that qubit, and per-block counts
  // of ops still to be emitted on each qubit.
  std::vector<std::vector<std::size_t>> queue(n);
  std::vector<std::size_t> head(n, 0);
  std::vector<std::vector<int>> remaining(blocks.size(), std::vector<int>(n, 0));
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& op : blocks[b].circuit.ops()) {
      for (int q : op.location) ++remaining[b][blocks[b].location[q]];
    }
    for (int q = 0; q < n; ++q) {
      if (remaining[b][q] > 0) queue[q].push_back(b);
    }
    total += blocks[b].circuit.size();
  }

  auto key_of = [&](std::size_t b, std::size_t i) -> std::size_t {
    const auto& block = blocks[b];
    if (block.sort_keys.size() == block.circuit.size()) return block.sort_keys[i];
    if (block.span.empty()) return 0;
    return block.span[i * block.span.size() / block.circuit.size()];
  };

  std::vector<std::size_t> next(blocks.size(), 0);
  std::vector<ir::Operation> ops;
  ops.reserve(total);
  if (origin) origin->clear();
  while (ops.size() < total) {
    std::size_t pick = blocks.size();
    std::size_t pick_key = std::numeric_limits<std::size_t>::max();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (next[b] >= blocks[b].circuit.size()) continue;
      const auto& op = blocks[b].circuit.op(next[b]);
      const bool ready = std::all_of(op.location.begin(), op.location.end(), [&](int lq) {
        const int q = blocks[b].location[lq];
        return queue[q][head[q]] == b;
      });
      if (!ready) continue;
      const std::size_t key = key_of(b, next[b]);
      if (key < pick_key) {
        pick = b;
        pick_key = key;
      }
    }
    // The lowest-numbered unfinished block is always ready, so pick is set.
    const auto& block = blocks[pick];
    const auto& op = block.circuit.op(next[pick]);
    std::vector<int> qubits;
    for (int lq : op.location) {
      const int q = block.location[lq];
      qubits.push_back(q);
      if (--remaining[pick][q] == 0) ++head[q];
    }
    ops.emplace_back(op.gate, ir::Location(std::span<const int>(qubits)), op.params);
    if (origin) origin->push_back(pick);
    ++next[pick];
  }
  return ir::Circuit(n, std::move(ops));
}

}  // namespace qinst::passes
