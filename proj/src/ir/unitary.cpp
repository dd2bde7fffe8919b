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

#include "qinst/ir/unitary.hpp"

#include <string>

#include "qinst/error.hpp"

namespace qinst::ir {

int qubits_for_dim(Eigen::Index dim) {
  if (dim <= 0) return -1;
  int q = 0;
  while ((Eigen::Index{1} << q) < dim) ++q;
  return (Eigen::Index{1} << q) == dim ? q : -1;
}

double unitarity_error(const Matrix& m) {
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

UnitaryMatrix::UnitaryMatrix(Matrix m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("unitary must be square, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
  const int q = qubits_for_dim(m.rows());
  if (q < 0) {
    throw ShapeError("unitary dimension " + std::to_string(m.rows()) +
                     " is not a power of two");
  }
  const double err = ir::unitarity_error(m);
  if (!(err <= kUnitarityTolerance)) {
    throw UnitarityError("matrix is not unitary: ||U'U - I||_F = " +
                         std::to_string(err));
  }
  m_ = std::move(m);
  num_qubits_ = q;
}

UnitaryMatrix::UnitaryMatrix(Matrix m, Unchecked)
    : m_(std::move(m)), num_qubits_(qubits_for_dim(m_.rows())) {}

UnitaryMatrix UnitaryMatrix::identity(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return UnitaryMatrix(Matrix::Identity(dim, dim), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::unchecked(Matrix m) {
  return UnitaryMatrix(std::move(m), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(m_.adjoint(), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (dim() != rhs.dim()) {
    throw ShapeError("cannot multiply unitaries of dimension " +
                     std::to_string(dim()) + " and " +
                     std::to_string(rhs.dim()));
  }
  return UnitaryMatrix(m_ * rhs.m_, Unchecked{});
}

double UnitaryMatrix::unitarity_error() const {
  return ir::unitarity_error(m_);
}

}  // namespace qinst::ir
