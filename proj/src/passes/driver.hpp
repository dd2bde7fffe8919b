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

#include <exception>
#include <optional>

#include <omp.h>

#include "qinst/passes/blocks.hpp"
#include "qinst/passes/partition.hpp"

namespace qinst::passes::detail {

struct BlockOutcome {
  Block compiled;
  double residual = 0.0;
  int sweeps = 0;
};

inline int resolve_jobs(int jobs) {
  return jobs > 0 ? jobs : omp_get_max_threads();
}

// Runs fn(index, block) over every block of the partition on up to `jobs`
// threads and reassembles by block index. When several blocks throw, the
// error of the lowest index is rethrown.
template <class Fn>
PartitionedResult run_blocks(const Partition& part, int jobs, Fn&& fn) {
  const auto count = static_cast<long>(part.blocks.size());
  std::vector<std::optional<BlockOutcome>> outcomes(part.blocks.size());
  std::exception_ptr error;
  long error_index = count;

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (long b = 0; b < count; ++b) {
    try {
      outcomes[b] = fn(static_cast<std::size_t>(b), part.blocks[b]);
    } catch (...) {
#pragma omp critical(qinst_block_error)
      {
        if (b < error_index) {
          error_index = b;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);

  Partition compiled{part.num_qubits, {}};
  compiled.blocks.reserve(outcomes.size());
  for (auto& o : outcomes) compiled.blocks.push_back(o->compiled);
  std::vector<std::size_t> origin;
  PartitionedResult result;
  result.circuit = reassemble(compiled, &origin);

  result.blocks.resize(outcomes.size());
  for (std::size_t b = 0; b < outcomes.size(); ++b) {
    auto& rec = result.blocks[b];
    rec.index = b;
    rec.location = part.blocks[b].location;
    rec.span = part.blocks[b].span;
    rec.original = part.blocks[b].circuit;
    rec.compiled = outcomes[b]->compiled.circuit;
    rec.residual = outcomes[b]->residual;
    rec.sweeps = outcomes[b]->sweeps;
    result.sweeps = std::max(result.sweeps, rec.sweeps);
  }
  for (std::size_t i = 0; i < origin.size(); ++i) {
    result.blocks[origin[i]].compiled_ops.push_back(i);
  }
  return result;
}

}  // namespace qinst::passes::detail
