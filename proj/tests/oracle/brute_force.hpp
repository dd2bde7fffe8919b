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

// Reference implementations used only by the tests. Gate matrices are
// written out from their textbook definitions and circuits are multiplied
// out as dense 2^n x 2^n matrices, one basis entry at a time, so nothing here
// shares code with the library's strided kernels or gate tables.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qinst/ir/circuit.hpp"

namespace oracle {

using cd = std::complex<double>;
using Dense = Eigen::MatrixXcd;
constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

inline Dense mat2(cd a, cd b, cd c, cd d) {
  Dense m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Dense pauli_x() { return mat2(0, 1, 1, 0); }
inline Dense pauli_y() { return mat2(0, -kI, kI, 0); }
inline Dense pauli_z() { return mat2(1, 0, 0, -1); }

// exp(-i t P / 2) for P with P^2 = I.
inline Dense rotation(const Dense& p, double t) {
  return std::cos(t / 2) * Dense::Identity(p.rows(), p.cols()) -
         kI * std::sin(t / 2) * p;
}

inline Dense u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return mat2(c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s,
              std::exp(kI * (phi + lambda)) * c);
}

inline Dense fsim(double theta, double phi) {
  Dense m = Dense::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = m(2, 2) = std::cos(theta);
  m(1, 2) = m(2, 1) = -kI * std::sin(theta);
  m(3, 3) = std::exp(-kI * phi);
  return m;
}

/// Textbook matrix of a registry gate, first location qubit most significant.
inline Dense gate_matrix(const std::string& name, const std::vector<double>& p) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "u3") return u3(p[0], p[1], p[2]);
  if (name == "rx") return rotation(pauli_x(), p[0]);
  if (name == "ry") return rotation(pauli_y(), p[0]);
  if (name == "rz") return rotation(pauli_z(), p[0]);
  if (name == "x") return pauli_x();
  if (name == "h") return mat2(r, r, r, -r);
  if (name == "sx") return 0.5 * mat2(1.0 + kI, 1.0 - kI, 1.0 - kI, 1.0 + kI);
  if (name == "rzz") return rotation(kron(pauli_z(), pauli_z()), p[0]);
  if (name == "rxx") return rotation(kron(pauli_x(), pauli_x()), p[0]);
  if (name == "xx") return rotation(kron(pauli_x(), pauli_x()), kPi / 2);
  if (name == "zz") return rotation(kron(pauli_z(), pauli_z()), kPi / 2);
  Dense m = Dense::Identity(4, 4);
  if (name == "cx") {
    m(2, 2) = m(3, 3) = 0;
    m(2, 3) = m(3, 2) = 1;
    return m;
  }
  if (name == "cz") {
    m(3, 3) = -1;
    return m;
  }
  if (name == "sqisw") {
    m(1, 1) = m(2, 2) = r;
    m(1, 2) = m(2, 1) = kI * r;
    return m;
  }
  if (name == "syc") return fsim(kPi / 2, kPi / 6);
  throw std::invalid_argument("oracle has no matrix for " + name);
}

/// Embeds a gate on `qubits` into n qubits, qubit 0 being the most
/// significant bit, by evaluating every matrix entry directly.
inline Dense embed(const Dense& g, const std::vector<int>& qubits, int n) {
  const long dim = 1L << n;
  const int k = static_cast<int>(qubits.size());
  auto bit = [n](long index, int q) { return (index >> (n - 1 - q)) & 1L; };
  Dense out = Dense::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      bool rest_equal = true;
      for (int q = 0; q < n && rest_equal; ++q) {
        bool target = false;
        for (int t : qubits) target = target || t == q;
        if (!target && bit(i, q) != bit(j, q)) rest_equal = false;
      }
      if (!rest_equal) continue;
      long row = 0, col = 0;
      for (int t = 0; t < k; ++t) {
        row = (row << 1) | bit(i, qubits[t]);
        col = (col << 1) | bit(j, qubits[t]);
      }
      out(i, j) = g(row, col);
    }
  }
  return out;
}

inline Dense op_matrix(const qinst::ir::Operation& op, int n) {
  std::vector<int> qubits(op.location.begin(), op.location.end());
  return embed(gate_matrix(op.gate.name(), op.params), qubits, n);
}

/// Product of the op matrices, later ops on the left.
inline Dense circuit_matrix(const qinst::ir::Circuit& c) {
  Dense u = Dense::Identity(1L << c.num_qubits(), 1L << c.num_qubits());
  for (const auto& op : c.ops()) u = op_matrix(op, c.num_qubits()) * u;
  return u;
}

inline double hs_distance(const Dense& u, const Dense& v) {
  const cd t = (v.adjoint() * u).trace();
  return 1.0 - std::abs(t) / static_cast<double>(u.rows());
}

/// Central differences of f at x with step h.
inline std::vector<double> finite_difference(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto plus = x, minus = x;
    plus[i] += h;
    minus[i] -= h;
    g[i] = (f(plus) - f(minus)) / (2 * h);
  }
  return g;
}

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
inline Dense haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Dense z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = cd(normal(rng), normal(rng));
  Eigen::HouseholderQR<Dense> qr(z);
  Dense q = qr.householderQ();
  Dense r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

/// Counts gates by arity from scratch.
inline std::pair<int, int> recount(const qinst::ir::Circuit& c) {
  int one = 0, two = 0;
  for (const auto& op : c.ops()) (op.location.size() == 1 ? one : two)++;
  return {one, two};
}

}  // namespace oracle
