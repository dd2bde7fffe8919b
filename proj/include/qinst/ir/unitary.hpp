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

#include <Eigen/Dense>
#include <complex>

namespace qinst::ir {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Default upper bound on the number of qubits whose unitary may be
/// materialised as a dense matrix.
inline constexpr int kDefaultQubitCap = 10;

/**
 * Dense square unitary of dimension 2^q.
 *
 * Qubit 0 is the most significant bit of the basis-state index: on two
 * qubits |q0 q1> has index 2*q0 + q1. Every kernel, gate matrix and parser in
 * the library uses this ordering.
 *
 * The public constructor rejects matrices with ||U^dagger U - I||_F above
 * kUnitarityTolerance. Kernels that produce products of already-validated
 * unitaries go through unchecked().
 */
class UnitaryMatrix {
 public:
  static constexpr double kUnitarityTolerance = 1e-12;

  explicit UnitaryMatrix(Matrix m);

  static UnitaryMatrix identity(int num_qubits);
  static UnitaryMatrix unchecked(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  int num_qubits() const { return num_qubits_; }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

  /// Frobenius norm of U^dagger U - I.
  double unitarity_error() const;

  bool operator==(const UnitaryMatrix& other) const { return m_ == other.m_; }

 private:
  struct Unchecked {};
  UnitaryMatrix(Matrix m, Unchecked);

  Matrix m_;
  int num_qubits_ = 0;
};

/// Frobenius norm of m^dagger m - I.
double unitarity_error(const Matrix& m);

/// Returns log2(dim) or -1 when dim is not a positive power of two.
int qubits_for_dim(Eigen::Index dim);

}  // namespace qinst::ir
