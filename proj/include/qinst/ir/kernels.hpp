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

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/gate.hpp"

namespace qinst::ir::kernels {

// Local gate application on a dense 2^n x 2^n column-major matrix. Each
// kernel has a serial reference version and an OpenMP version that splits the
// independent columns (left) or rows (right) across threads. Both perform the
// same floating-point operations per element, so their results are bitwise
// identical.

/// m <- (g (x) I) m
void apply_left_serial(Matrix& m, const GateMatrix& g, const Location& loc,
                       int num_qubits);
void apply_left_omp(Matrix& m, const GateMatrix& g, const Location& loc,
                    int num_qubits);

/// m <- m (g (x) I)
void apply_right_serial(Matrix& m, const GateMatrix& g, const Location& loc,
                        int num_qubits);
void apply_right_omp(Matrix& m, const GateMatrix& g, const Location& loc,
                     int num_qubits);

/// Dispatches to the OpenMP kernel for large matrices when not already
/// inside a parallel region.
void apply_left(Matrix& m, const GateMatrix& g, const Location& loc,
                int num_qubits);
void apply_right(Matrix& m, const GateMatrix& g, const Location& loc,
                 int num_qubits);

/// Dimension from which apply_left/apply_right use the OpenMP kernels.
inline constexpr Eigen::Index kParallelDim = 256;

/**
 * Gate environment E with E(b, a) = sum_rest (left * right)((b,rest),(a,rest)),
 * so that tr((g (x) I) left right) = sum_{a,b} g(a,b) E(b,a).
 */
void environment(const Matrix& left, const Matrix& right, const Location& loc,
                 int num_qubits, GateMatrix& env);

/// sum_{a,b} g(a,b) env(b,a)
Complex contract(const GateMatrix& g, const GateMatrix& env);

/// tr(a * b) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

}  // namespace qinst::ir::kernels
