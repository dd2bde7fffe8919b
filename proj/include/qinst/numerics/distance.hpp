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

#include <vector>

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/unitary.hpp"

namespace qinst::numerics {

using ir::Circuit;
using ir::Complex;
using ir::ParamVector;
using ir::UnitaryMatrix;

// Hilbert-Schmidt distances between a circuit unitary C and a target V of
// dimension N, all derived from t = tr(V^dagger C):
//   hs_distance    1 - |t| / N              global-phase invariant, in [0, 1]
//   hs_distance_f  1 - Re(t) / N            phase sensitive, in [0, 2]
//   hs_distance_p  sqrt(1 - |t|^2 / N^2)    in [0, 1]
// Round-off can push |t| slightly above N; hs_distance and hs_distance_p
// clamp at 0. hs_distance_f is returned as computed.

double distance_from_trace(Complex trace, int dim);
double distance_f_from_trace(Complex trace, int dim);
double distance_p_from_trace(Complex trace, int dim);

/// tr(target^dagger * u); throws ShapeError on a dimension mismatch.
Complex hs_trace(const UnitaryMatrix& u, const UnitaryMatrix& target);

double hs_distance(const UnitaryMatrix& u, const UnitaryMatrix& target);

double hs_distance(const Circuit& circuit, const ParamVector& params,
                   const UnitaryMatrix& target);
double hs_distance_f(const Circuit& circuit, const ParamVector& params,
                     const UnitaryMatrix& target);
double hs_distance_p(const Circuit& circuit, const ParamVector& params,
                     const UnitaryMatrix& target);

struct CostGradient {
  double value;
  std::vector<double> gradient;
};

/// hs_distance and its analytic gradient with respect to every circuit
/// parameter, in O(ops) local gate applications.
CostGradient cost_and_gradient(const Circuit& circuit, const ParamVector& params,
                               const UnitaryMatrix& target);

}  // namespace qinst::numerics
