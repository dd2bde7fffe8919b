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

#include "qinst/passes/delete.hpp"

#include <numeric>
#include <string>

#include "qinst/error.hpp"
#include "qinst/numerics/distance.hpp"
#include "driver.hpp"

namespace qinst::passes {
namespace {

// Index of the next op sharing a qubit with op i, if it acts on exactly the
// same qubits.
std::optional<std::size_t> partner_of(const ir::Circuit& c, std::size_t i) {
  const auto& loc = c.op(i).location;
  for (std::size_t j = i + 1; j < c.size(); ++j) {
    const auto& other = c.op(j).location;
    bool touches = false;
    for (int q : other) touches = touches || loc.contains(q);
    if (!touches) continue;
    if (other.size() != loc.size()) return std::nullopt;
    for (int q : other) {
      if (!loc.contains(q)) return std::nullopt;
    }
    return j;
  }
  return std::nullopt;
}

DeleteResult delete_gates_impl(const ir::Circuit& input,
                               const DeleteConfig& config,
                               std::uint64_t stream) {
  config.validate();
  const ir::UnitaryMatrix target = ir::circuit_unitary(input);
  numerics::InstantiationConfig inst = config.instantiation;
  inst.threshold = config.epsilon;

  DeleteResult result;
  result.circuit = input;
  result.kept.resize(input.size());
  std::iota(result.kept.begin(), result.kept.end(), std::size_t{0});

  auto try_remove = [&](std::vector<std::size_t> indices) {
    const ir::Circuit candidate = result.circuit.replace_region(indices, {});
    inst.seed = numerics::derive_seed(config.instantiation.seed, stream,
                                      static_cast<std::uint64_t>(result.attempts));
    ++result.attempts;
    const auto solved = numerics::instantiate(candidate, target, inst);
    if (!(solved.distance <= config.epsilon)) return false;
    result.circuit = candidate.with_params(solved.params);
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
      result.kept.erase(result.kept.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    return true;
  };

  while (!config.max_sweeps || result.sweeps < *config.max_sweeps) {
    const std::size_t before = result.circuit.size();
    std::size_t i = 0;
    while (i < result.circuit.size()) {
      if (try_remove({i})) continue;
      if (result.circuit.op(i).gate.num_params() == 0) {
        if (auto j = partner_of(result.circuit, i); j && try_remove({i, *j})) {
          continue;
        }
      }
      ++i;
    }
    ++result.sweeps;
    if (result.circuit.size() == before) break;
  }
  result.distance = numerics::hs_distance(result.circuit, result.circuit.params(), target);
  return result;
}

}  // namespace

void DeleteConfig::validate() const {
  if (!(epsilon > 0)) {
    throw ConfigError("epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (max_sweeps && *max_sweeps < 1) {
    throw ConfigError("max_sweeps must be at least 1, got " +
                      std::to_string(*max_sweeps));
  }
  instantiation.validate();
}

DeleteResult delete_gates(const ir::Circuit& circuit, const DeleteConfig& config) {
  return delete_gates_impl(circuit, config, 0);
}

PartitionedResult delete_gates_partitioned(const ir::Circuit& circuit,
                                           int block_size,
                                           const DeleteConfig& config,
                                           int jobs) {
  config.validate();
  const Partition part = partition(circuit, block_size);
  return detail::run_blocks(part, jobs, [&](std::size_t b, const Block& block) {
    DeleteResult r = delete_gates_impl(block.circuit, config, b);
    detail::BlockOutcome out{block, r.distance, r.sweeps};
    out.compiled.circuit = std::move(r.circuit);
    out.compiled.sort_keys.clear();
    for (std::size_t k : r.kept) out.compiled.sort_keys.push_back(block.span[k]);
    return out;
  });
}

}  // namespace qinst::passes
