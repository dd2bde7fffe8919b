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

#include <cstdint>

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/unitary.hpp"

namespace qinst::numerics {

/// Default acceptance threshold on the Hilbert-Schmidt distance.
inline constexpr double kDefaultThreshold = 1e-10;
inline constexpr int kDefaultMultistarts = 4;

struct InstantiationConfig {
  int multistarts = kDefaultMultistarts;
  /// A start whose distance is at or below this ends the search.
  double threshold = kDefaultThreshold;
  int max_iterations = 1000;
  double gradient_tolerance = 1e-12;
  std::uint64_t seed = 0;

  /// Throws ConfigError unless threshold > 0, multistarts >= 1 and
  /// max_iterations >= 1.
  void validate() const;
};

struct InstantiationResult {
  ir::ParamVector params;
  /// hs_distance of the circuit at params, in [0, 1].
  double distance;
  int starts_used;
};

/**
 * Solves for circuit parameters that bring the circuit unitary closest to
 * target up to global phase.
 *
 * Start 0 is the warm start; starts 1.. are uniform in [-pi, pi]^k drawn from
 * a generator seeded by (config.seed, start index). Each start runs L-BFGS on
 * 1 - |tr(V^dagger C)| / N to convergence. The first start reaching
 * config.threshold is returned; otherwise the lowest distance wins, ties going
 * to the earlier start. The result is a pure function of the inputs.
 */
InstantiationResult instantiate(const ir::Circuit& circuit,
                                const ir::ParamVector& warm_start,
                                const ir::UnitaryMatrix& target,
                                const InstantiationConfig& config);

/// Warm-starts from the circuit's own parameters.
InstantiationResult instantiate(const ir::Circuit& circuit,
                                const ir::UnitaryMatrix& target,
                                const InstantiationConfig& config);

/// Mixes a base seed with stream and index counters (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t index = 0);

}  // namespace qinst::numerics
