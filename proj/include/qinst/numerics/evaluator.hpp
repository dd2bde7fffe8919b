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

#include <span>
#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/gate.hpp"
#include "qinst/ir/unitary.hpp"

namespace qinst::numerics {

/**
 * Reusable workspace for evaluating tr(V^dagger C(alpha)) and its gradient
 * for one (circuit structure, target) pair.
 *
 * The gradient uses a single backward sweep: starting from L = C and
 * R = V^dagger, each op j is peeled off L with G_j^dagger, its environment
 * against R gives d tr / d theta for all of its parameters, and R absorbs G_j
 * from the right. Memory stays at two dense matrices regardless of depth.
 *
 * Not thread-safe; give each worker its own evaluator.
 */
class CircuitEvaluator {
 public:
  CircuitEvaluator(const ir::Circuit& circuit, const ir::UnitaryMatrix& target,
                   int max_qubits = ir::kDefaultQubitCap);

  int num_params() const { return num_params_; }
  int dim() const { return static_cast<int>(target_adjoint_.rows()); }

  ir::Complex trace(std::span<const double> params);

  /// Unclamped 1 - |tr| / N.
  double distance(std::span<const double> params);

  /// Returns the unclamped distance and writes its gradient. At |tr| = 0 the
  /// modulus is not differentiable and the gradient of 1 - Re(tr) / N is
  /// used instead.
  double distance_and_gradient(std::span<const double> params,
                               std::span<double> gradient);

 private:
  struct OpInfo {
    ir::Gate gate;
    ir::Location location;
    int offset;
    int num_params;
  };

  void forward(std::span<const double> params);

  int num_qubits_;
  int num_params_ = 0;
  std::vector<OpInfo> ops_;
  std::vector<ir::GateMatrix> mats_;
  std::vector<ir::GateMatrix> partials_;
  ir::GateMatrix adjoint_;
  ir::GateMatrix env_;
  ir::Matrix target_adjoint_;
  ir::Matrix left_;
  ir::Matrix right_;
};

}  // namespace qinst::numerics
