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

#include "qinst/numerics/evaluator.hpp"

#include <cmath>
#include <string>

#include "qinst/error.hpp"
#include "qinst/ir/kernels.hpp"

namespace qinst::numerics {

namespace kernels = ir::kernels;

CircuitEvaluator::CircuitEvaluator(const ir::Circuit& circuit,
                                   const ir::UnitaryMatrix& target,
                                   int max_qubits)
    : num_qubits_(circuit.num_qubits()) {
  if (circuit.num_qubits() > max_qubits) {
    throw CapacityError("cannot evaluate a " +
                        std::to_string(circuit.num_qubits()) +
                        "-qubit circuit (cap is " + std::to_string(max_qubits) +
                        " qubits)");
  }
  if (target.num_qubits() != circuit.num_qubits()) {
    throw ShapeError("target acts on " + std::to_string(target.num_qubits()) +
                     " qubits but the circuit has " +
                     std::to_string(circuit.num_qubits()));
  }
  ops_.reserve(circuit.size());
  mats_.resize(circuit.size());
  int max_k = 0;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& op = circuit.op(i);
    const int k = op.gate.num_params();
    ops_.push_back({op.gate, op.location, num_params_, k});
    if (k == 0) op.gate.unitary_into({}, mats_[i]);
    num_params_ += k;
    max_k = std::max(max_k, k);
  }
  partials_.resize(max_k);
  target_adjoint_ = target.matrix().adjoint();
}

void CircuitEvaluator::forward(std::span<const double> params) {
  if (static_cast<int>(params.size()) != num_params_) {
    throw ArityError("evaluator expects " + std::to_string(num_params_) +
                     " parameters, got " + std::to_string(params.size()));
  }
  const Eigen::Index n = target_adjoint_.rows();
  left_.setIdentity(n, n);
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto& op = ops_[i];
    if (op.num_params > 0) {
      op.gate.unitary_into(params.subspan(op.offset, op.num_params), mats_[i]);
    }
    kernels::apply_left(left_, mats_[i], op.location, num_qubits_);
  }
}

ir::Complex CircuitEvaluator::trace(std::span<const double> params) {
  forward(params);
  return kernels::trace_of_product(target_adjoint_, left_);
}

double CircuitEvaluator::distance(std::span<const double> params) {
  return 1.0 - std::abs(trace(params)) / static_cast<double>(dim());
}

double CircuitEvaluator::distance_and_gradient(std::span<const double> params,
                                               std::span<double> gradient) {
  forward(params);
  const double n = static_cast<double>(dim());
  const ir::Complex tr = kernels::trace_of_product(target_adjoint_, left_);
  const double mag = std::abs(tr);

  // d(1 - |t|/N) = -Re(conj(t)/|t| dt) / N
  const ir::Complex weight =
      mag > 1e-14 * n ? std::conj(tr) / mag : ir::Complex{1.0, 0.0};

  right_ = target_adjoint_;
  for (std::size_t j = ops_.size(); j-- > 0;) {
    const auto& op = ops_[j];
    adjoint_ = mats_[j].adjoint();
    kernels::apply_left(left_, adjoint_, op.location, num_qubits_);
    if (op.num_params > 0) {
      kernels::environment(left_, right_, op.location, num_qubits_, env_);
      std::span<ir::GateMatrix> d(partials_.data(), op.num_params);
      op.gate.partials_into(params.subspan(op.offset, op.num_params), d);
      for (int p = 0; p < op.num_params; ++p) {
        gradient[op.offset + p] =
            -std::real(weight * kernels::contract(d[p], env_)) / n;
      }
    }
    if (j > 0) kernels::apply_right(right_, mats_[j], op.location, num_qubits_);
  }
  return 1.0 - mag / n;
}

}  // namespace qinst::numerics
