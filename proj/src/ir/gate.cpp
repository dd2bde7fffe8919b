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

#include "qinst/ir/gate.hpp"

#include <string>

#include "qinst/error.hpp"

namespace qinst::ir {

Gate::Gate(std::string name, int arity, int num_params, Generator generator,
           Partials partials) {
  if (arity != 1 && arity != 2) {
    throw ArityError("gate '" + name + "' has unsupported arity " +
                     std::to_string(arity));
  }
  if (num_params < 0) {
    throw ArityError("gate '" + name + "' has negative parameter count");
  }
  def_ = std::make_shared<const Definition>(
      Definition{std::move(name), arity, num_params, std::move(generator),
                 std::move(partials)});
}

Gate Gate::fixed(std::string name, const Matrix& matrix) {
  // Validate through UnitaryMatrix so custom targets obey the same contract.
  UnitaryMatrix checked{matrix};
  const int arity = checked.num_qubits();
  if (arity != 1 && arity != 2) {
    throw ArityError("fixed gate '" + name + "' must act on 1 or 2 qubits");
  }
  GateMatrix stored = checked.matrix();
  return Gate(
      std::move(name), arity, 0,
      [stored](std::span<const double>, GateMatrix& out) { out = stored; },
      [](std::span<const double>, std::span<GateMatrix>) {});
}

UnitaryMatrix Gate::unitary(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != num_params()) {
    throw ArityError("gate '" + name() + "' expects " +
                     std::to_string(num_params()) + " parameters, got " +
                     std::to_string(params.size()));
  }
  GateMatrix m(dim(), dim());
  def_->generator(params, m);
  return UnitaryMatrix::unchecked(Matrix(m));
}

std::vector<Matrix> Gate::partials(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != num_params()) {
    throw ArityError("gate '" + name() + "' expects " +
                     std::to_string(num_params()) + " parameters, got " +
                     std::to_string(params.size()));
  }
  std::vector<GateMatrix> raw(num_params(), GateMatrix(dim(), dim()));
  def_->partials(params, raw);
  return {raw.begin(), raw.end()};
}

void Gate::unitary_into(std::span<const double> params, GateMatrix& out) const {
  out.resize(dim(), dim());
  def_->generator(params, out);
}

void Gate::partials_into(std::span<const double> params,
                         std::span<GateMatrix> out) const {
  for (auto& m : out) m.resize(dim(), dim());
  def_->partials(params, out);
}

}  // namespace qinst::ir
