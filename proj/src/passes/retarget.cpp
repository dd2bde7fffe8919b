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

#include "qinst/passes/retarget.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>

#include "qinst/error.hpp"
#include "qinst/numerics/distance.hpp"
#include "qinst/passes/partition.hpp"
#include "driver.hpp"

namespace qinst::passes {
namespace {

class Retargeter {
 public:
  Retargeter(const RetargetConfig& config, std::uint64_t stream)
      : config_(config), stream_(stream) {
    inst_ = config.instantiation;
    inst_.threshold = config.epsilon;
  }

  RetargetResult run(const ir::Circuit& input) {
    const ir::UnitaryMatrix target = ir::circuit_unitary(input);
    RetargetResult result;
    result.circuit = input;
    while (auto region = first_foreign_region(result.circuit)) {
      result.circuit = replace(result.circuit, *region, target, result.regions);
      ++result.regions;
    }
    result.circuit = rewrite_single_qubit_gates(result.circuit);
    result.distance =
        numerics::hs_distance(result.circuit, result.circuit.params(), target);
    result.attempts = attempts_;
    return result;
  }

 private:
  bool foreign_two_qubit(const ir::Operation& op) const {
    return op.location.size() == 2 && !config_.target.contains_two_qubit(op.gate);
  }

  std::optional<ir::Region> first_foreign_region(const ir::Circuit& c) const {
    for (auto& region : ir::group_interactions(c)) {
      for (std::size_t idx : region.ops) {
        if (foreign_two_qubit(c.op(idx))) return region;
      }
    }
    return std::nullopt;
  }

  // Random starts are keyed by what is being solved rather than by how many
  // solves came before, so the same candidate sees the same starts whatever
  // else the gate set contains.
  numerics::InstantiationResult solve(const ir::Circuit& c,
                                      const ir::UnitaryMatrix& target,
                                      std::uint64_t key) {
    inst_.seed = numerics::derive_seed(config_.instantiation.seed, stream_, key);
    ++attempts_;
    return numerics::instantiate(c, target, inst_);
  }

  static std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) h = (h ^ ch) * 0x100000001b3ULL;
    return h;
  }

  // Identifies a template by its two-qubit gate and count.
  static std::uint64_t template_key(const ir::Circuit& t) {
    std::uint64_t k = 0;
    std::string_view gate;
    for (const auto& op : t.ops()) {
      if (op.location.size() == 2) {
        ++k;
        gate = op.gate.name();
      }
    }
    return fnv1a(gate) ^ (k << 56);
  }

  ir::Circuit replace(const ir::Circuit& c, const ir::Region& region,
                      const ir::UnitaryMatrix& target, int regions_done) {
    const std::array<int, 2> local_pair{0, 1};
    const ir::UnitaryMatrix region_unitary = ir::circuit_unitary(
        extract(c, region.ops, std::span<const int>(region.pair)));
    const auto local = build_templates(local_pair, config_.target,
                                       config_.max_block_gates, 2);
    const auto global = build_templates(region.pair, config_.target,
                                        config_.max_block_gates, c.num_qubits());

    // Templates come ordered by two-qubit count and, within a count, share
    // the same total size, so the first success is the preferred one.
    for (std::size_t t = 0; t < local.size(); ++t) {
      const std::uint64_t key = numerics::derive_seed(
          static_cast<std::uint64_t>(regions_done), template_key(local[t]));
      const auto seeded = solve(local[t], region_unitary, key);
      const ir::Circuit replacement = global[t].with_params(seeded.params);
      const ir::Circuit candidate = c.replace_region(region.ops, replacement.ops());
      const auto solved = solve(candidate, target, key + 1);
      if (solved.distance <= config_.epsilon) {
        return candidate.with_params(solved.params);
      }
    }
    std::ostringstream msg;
    msg << "no template reaches epsilon " << config_.epsilon
        << " for the interaction on qubits (" << region.pair[0] << ", "
        << region.pair[1] << ") covering ops " << region.ops.front() << ".."
        << region.ops.back();
    throw RetargetError(msg.str());
  }

  ir::Circuit rewrite_single_qubit_gates(const ir::Circuit& c) {
    const ir::Gate& single = config_.target.single_qubit_gate();
    std::vector<ir::Operation> ops = c.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].location.size() != 1 || ops[i].gate == single) continue;
      const ir::UnitaryMatrix u(ops[i].gate.unitary(ops[i].params));
      const ir::Circuit one(1, {ir::Operation(single, ir::Location{0},
                                              std::vector<double>(single.num_params(), 0.0))});
      const auto solved = solve(one, u, ~static_cast<std::uint64_t>(i));
      if (!(solved.distance <= config_.epsilon)) {
        throw RetargetError("cannot express " + ops[i].gate.name() + " at op " +
                            std::to_string(i) + " with " + single.name());
      }
      ops[i] = ir::Operation(single, ops[i].location, solved.params.values());
    }
    return ir::Circuit(c.num_qubits(), std::move(ops));
  }

  const RetargetConfig& config_;
  std::uint64_t stream_;
  numerics::InstantiationConfig inst_;
  int attempts_ = 0;
};

}  // namespace

void RetargetConfig::validate() const {
  if (!(epsilon > 0)) {
    throw ConfigError("epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (max_block_gates < 0) {
    throw ConfigError("max_block_gates must be non-negative, got " +
                      std::to_string(max_block_gates));
  }
  instantiation.validate();
}

RetargetResult retarget(const ir::Circuit& circuit, const RetargetConfig& config) {
  config.validate();
  return Retargeter(config, 0).run(circuit);
}

PartitionedResult retarget_partitioned(const ir::Circuit& circuit,
                                       int block_size,
                                       const RetargetConfig& config,
                                       int jobs) {
  config.validate();
  const Partition part = partition(circuit, block_size);
  return detail::run_blocks(part, jobs, [&](std::size_t b, const Block& block) {
    RetargetResult r = Retargeter(config, b).run(block.circuit);
    detail::BlockOutcome out{block, r.distance, 0};
    if (!(r.circuit == block.circuit)) {
      out.compiled.circuit = std::move(r.circuit);
      out.compiled.sort_keys.clear();
    }
    return out;
  });
}

}  // namespace qinst::passes
