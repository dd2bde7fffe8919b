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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/passes/blocks.hpp"
#include "qinst/passes/delete.hpp"
#include "qinst/passes/retarget.hpp"

namespace qinst::passes {

class Pass {
 public:
  virtual ~Pass() = default;
  virtual std::string name() const = 0;
  virtual PartitionedResult run(const ir::Circuit& circuit) const = 0;

  // Settings echoed into the report.
  virtual int block_size() const = 0;
  virtual double epsilon() const = 0;
  virtual int multistarts() const = 0;
};

class DeletePass : public Pass {
 public:
  DeletePass(int block_size, DeleteConfig config, int jobs = 0);

  std::string name() const override { return "delete"; }
  PartitionedResult run(const ir::Circuit& circuit) const override;
  int block_size() const override { return block_size_; }
  double epsilon() const override { return config_.epsilon; }
  int multistarts() const override { return config_.instantiation.multistarts; }

 private:
  int block_size_;
  DeleteConfig config_;
  int jobs_;
};

class RetargetPass : public Pass {
 public:
  RetargetPass(int block_size, RetargetConfig config, int jobs = 0);

  std::string name() const override { return "retarget"; }
  PartitionedResult run(const ir::Circuit& circuit) const override;
  int block_size() const override { return block_size_; }
  double epsilon() const override { return config_.epsilon; }
  int multistarts() const override { return config_.instantiation.multistarts; }

 private:
  int block_size_;
  RetargetConfig config_;
  int jobs_;
};

struct PassRecord {
  std::string pass;
  ir::GateCounts before;
  ir::GateCounts after;
  int sweeps = 0;
  double wall_ms = 0.0;
  int block_size = 0;
  double epsilon = 0.0;
  int multistarts = 0;
  std::vector<BlockRecord> blocks;

  /// after.two_qubit / before.two_qubit, or 1 when the input had none.
  double two_qubit_ratio() const;
};

struct PassReport {
  std::vector<PassRecord> passes;
};

/// Runs the passes in order. Throws ConfigError on an empty list.
std::pair<ir::Circuit, PassReport> run_pipeline(
    const ir::Circuit& circuit, const std::vector<std::unique_ptr<Pass>>& passes);

}  // namespace qinst::passes
