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

#include "qinst/numerics/distance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qinst/error.hpp"
#include "qinst/ir/kernels.hpp"
#include "qinst/numerics/evaluator.hpp"

namespace qinst::numerics {

double distance_from_trace(Complex trace, int dim) {
  return std::clamp(1.0 - std::abs(trace) / dim, 0.0, 1.0);
}

double distance_f_from_trace(Complex trace, int dim) {
  return 1.0 - trace.real() / dim;
}

double distance_p_from_trace(Complex trace, int dim) {
  const double r = std::abs(trace) / dim;
  return std::sqrt(std::clamp(1.0 - r * r, 0.0, 1.0));
}

Complex hs_trace(const UnitaryMatrix& u, const UnitaryMatrix& target) {
  if (u.dim() != target.dim()) {
    throw ShapeError("cannot compare unitaries of dimension " +
                     std::to_string(u.dim()) + " and " +
                     std::to_string(target.dim()));
  }
  return ir::kernels::trace_of_product(target.matrix().adjoint(), u.matrix());
}

double hs_distance(const UnitaryMatrix& u, const UnitaryMatrix& target) {
  return distance_from_trace(hs_trace(u, target), u.dim());
}

double hs_distance(const Circuit& circuit, const ParamVector& params,
                   const UnitaryMatrix& target) {
  CircuitEvaluator eval(circuit, target);
  return distance_from_trace(eval.trace(params.span()), eval.dim());
}

double hs_distance_f(const Circuit& circuit, const ParamVector& params,
                     const UnitaryMatrix& target) {
  CircuitEvaluator eval(circuit, target);
  return distance_f_from_trace(eval.trace(params.span()), eval.dim());
}

double hs_distance_p(const Circuit& circuit, const ParamVector& params,
                     const UnitaryMatrix& target) {
  CircuitEvaluator eval(circuit, target);
  return distance_p_from_trace(eval.trace(params.span()), eval.dim());
}

CostGradient cost_and_gradient(const Circuit& circuit, const ParamVector& params,
                               const UnitaryMatrix& target) {
  CircuitEvaluator eval(circuit, target);
  CostGradient out{0.0, std::vector<double>(eval.num_params(), 0.0)};
  out.value = std::clamp(eval.distance_and_gradient(params.span(), out.gradient),
                         0.0, 1.0);
  return out;
}

}  // namespace qinst::numerics
