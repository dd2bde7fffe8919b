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
#include <vector>

#include "qinst/ir/circuit.hpp"

namespace qinst::passes {

/// What a partitioned pass did to one block.
struct BlockRecord {
  std::size_t index = 0;
  std::vector<int> location;
  /// Indices of the block's ops in the pass input.
  std::vector<std::size_t> span;
  /// Indices of the block's ops in the pass output.
  std::vector<std::size_t> compiled_ops;
  ir::Circuit original{0};
  ir::Circuit compiled{0};
  /// Distance between the compiled and original block unitaries.
  double residual = 0.0;
  int sweeps = 0;
};

struct PartitionedResult {
  ir::Circuit circuit{0};
  std::vector<BlockRecord> blocks;
  /// Largest sweep count over the blocks.
  int sweeps = 0;
};

}  // namespace qinst::passes
