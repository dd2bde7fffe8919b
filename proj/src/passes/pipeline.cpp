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

#include "qinst/passes/pipeline.hpp"

#include <chrono>

#include "qinst/error.hpp"

namespace qinst::passes {

DeletePass::DeletePass(int block_size, DeleteConfig config, int jobs)
    : block_size_(block_size), config_(std::move(config)), jobs_(jobs) {
  config_.validate();
}

PartitionedResult DeletePass::run(const ir::Circuit& circuit) const {
  return delete_gates_partitioned(circuit, block_size_, config_, jobs_);
}

RetargetPass::RetargetPass(int block_size, RetargetConfig config, int jobs)
    : block_size_(block_size), config_(std::move(config)), jobs_(jobs) {
  config_.validate();
}

PartitionedResult RetargetPass::run(const ir::Circuit& circuit) const {
  return retarget_partitioned(circuit, block_size_, config_, jobs_);
}

double PassRecord::two_qubit_ratio() const {
  if (before.two_qubit == 0) return 1.0;
  return static_cast<double>(after.two_qubit) / before.two_qubit;
}

std::pair<ir::Circuit, PassReport> run_pipeline(
    const ir::Circuit& circuit, const std::vector<std::unique_ptr<Pass>>& passes) {
  if (passes.empty()) throw ConfigError("pass pipeline is empty");
  ir::Circuit current = circuit;
  PassReport report;
  for (const auto& pass : passes) {
    PassRecord rec;
    rec.pass = pass->name();
    rec.before = current.counts();
    rec.block_size = pass->block_size();
    rec.epsilon = pass->epsilon();
    rec.multistarts = pass->multistarts();
    const auto start = std::chrono::steady_clock::now();
    PartitionedResult result = pass->run(current);
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    current = std::move(result.circuit);
    rec.after = current.counts();
    rec.sweeps = result.sweeps;
    rec.blocks = std::move(result.blocks);
    report.passes.push_back(std::move(rec));
  }
  return {std::move(current), std::move(report)};
}

}  // namespace qinst::passes
