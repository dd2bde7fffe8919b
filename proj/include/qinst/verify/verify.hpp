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
#include <string>
#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/passes/blocks.hpp"

namespace qinst::verify {

inline constexpr int kDefaultSectionSize = 8;

enum class Mode { exact, upper_bound };

struct SectionDistance {
  std::size_t id = 0;
  std::vector<int> location;
  double distance = 0.0;
};

struct VerificationReport {
  Mode mode = Mode::exact;
  /// Exact mode: the whole-circuit distance. Upper-bound mode: the sum of
  /// section distances, added in section order.
  double total_distance = 0.0;
  /// (sum of sqrt(section distance))^2. The square root of the distance is
  /// subadditive under composition, so this always bounds the whole-circuit
  /// distance, whereas the plain sum can undershoot it for non-negligible
  /// errors. Equals total_distance in exact mode.
  double composed_bound = 0.0;
  std::vector<SectionDistance> sections;
  /// Qubits per section, or the circuit width in exact mode.
  int section_size = 0;
};

/// Original and compiled halves of one verification section. Both circuits
/// are over the local qubits of their location.
struct SectionPair {
  std::vector<int> original_location;
  ir::Circuit original{0};
  std::vector<int> compiled_location;
  ir::Circuit compiled{0};
};

/**
 * Distances below this are indistinguishable from rounding noise for
 * unitaries of dimension dim; reported distances under it are snapped to 0.
 */
double resolution_floor(int dim);

/// Throws ShapeError on a qubit-count mismatch, CapacityError above the cap.
VerificationReport verify_exact(const ir::Circuit& original,
                                const ir::Circuit& compiled);

/**
 * Computes every section distance exactly and sums them. Throws PairingError
 * when a pair's locations differ or do not match its circuits.
 */
VerificationReport verify_upper_bound(const std::vector<SectionPair>& sections,
                                      int section_size = 0, int jobs = 0);

/**
 * Merges pass blocks into sections of at most section_size qubits with the
 * same greedy grouping the passes use. Throws PartitionError when a block is
 * wider than section_size.
 */
std::vector<SectionPair> resection(const std::vector<passes::BlockRecord>& blocks,
                                   int num_qubits, int section_size);

/**
 * Rebuilds block records from whole circuits: block i owns the ops at
 * blocks[i].span in `original` and at blocks[i].compiled_ops in `compiled`.
 * Throws PairingError unless the spans cover each circuit exactly once and
 * every op stays inside its block's location.
 */
std::vector<passes::BlockRecord> rebuild_blocks(
    const ir::Circuit& original, const ir::Circuit& compiled,
    const std::vector<passes::BlockRecord>& blocks);

/// Line-oriented table: a header, one row per section and the total.
std::string format_report(const VerificationReport& report);

const char* to_string(Mode mode);

}  // namespace qinst::verify
