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

#include "qinst/ir/kernels.hpp"

#include <omp.h>

#include <array>

namespace qinst::ir::kernels {
namespace {

struct Layout {
  Eigen::Index mask = 0;
  std::array<Eigen::Index, 4> off{};
  int local_dim = 0;
};

// Bit of qubit q within an n-qubit index, qubit 0 being the most significant.
Eigen::Index bit(int q, int num_qubits) {
  return Eigen::Index{1} << (num_qubits - 1 - q);
}

Layout layout_for(const Location& loc, int num_qubits) {
  Layout l;
  if (loc.size() == 1) {
    const Eigen::Index s = bit(loc[0], num_qubits);
    l.mask = s;
    l.off = {0, s, 0, 0};
    l.local_dim = 2;
  } else {
    const Eigen::Index s0 = bit(loc[0], num_qubits);
    const Eigen::Index s1 = bit(loc[1], num_qubits);
    l.mask = s0 | s1;
    l.off = {0, s1, s0, s0 | s1};
    l.local_dim = 4;
  }
  return l;
}

inline void left_column(Complex* col, Eigen::Index n, const GateMatrix& g,
                        const Layout& l) {
  if (l.local_dim == 2) {
    const Eigen::Index s = l.off[1];
    const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i & l.mask) continue;
      const Complex x0 = col[i], x1 = col[i + s];
      col[i] = g00 * x0 + g01 * x1;
      col[i + s] = g10 * x0 + g11 * x1;
    }
    return;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i & l.mask) continue;
    Complex v[4];
    for (int k = 0; k < 4; ++k) v[k] = col[i + l.off[k]];
    for (int r = 0; r < 4; ++r) {
      col[i + l.off[r]] =
          g(r, 0) * v[0] + g(r, 1) * v[1] + g(r, 2) * v[2] + g(r, 3) * v[3];
    }
  }
}

// Updates the column group rooted at base column j for every row.
inline void right_group(Complex* data, Eigen::Index n, Eigen::Index j,
                        const GateMatrix& g, const Layout& l) {
  if (l.local_dim == 2) {
    Complex* c0 = data + j * n;
    Complex* c1 = data + (j + l.off[1]) * n;
    const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (Eigen::Index r = 0; r < n; ++r) {
      const Complex a = c0[r], b = c1[r];
      c0[r] = a * g00 + b * g10;
      c1[r] = a * g01 + b * g11;
    }
    return;
  }
  Complex* c[4];
  for (int k = 0; k < 4; ++k) c[k] = data + (j + l.off[k]) * n;
  for (Eigen::Index r = 0; r < n; ++r) {
    const Complex v0 = c[0][r], v1 = c[1][r], v2 = c[2][r], v3 = c[3][r];
    for (int y = 0; y < 4; ++y) {
      c[y][r] = v0 * g(0, y) + v1 * g(1, y) + v2 * g(2, y) + v3 * g(3, y);
    }
  }
}

}  // namespace

void apply_left_serial(Matrix& m, const GateMatrix& g, const Location& loc,
                       int num_qubits) {
  const Layout l = layout_for(loc, num_qubits);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    left_column(m.data() + c * n, n, g, l);
  }
}

void apply_left_omp(Matrix& m, const GateMatrix& g, const Location& loc,
                    int num_qubits) {
  const Layout l = layout_for(loc, num_qubits);
  const Eigen::Index n = m.rows();
  const Eigen::Index cols = m.cols();
  Complex* data = m.data();
#pragma omp parallel for schedule(static)
  for (Eigen::Index c = 0; c < cols; ++c) {
    left_column(data + c * n, n, g, l);
  }
}

void apply_right_serial(Matrix& m, const GateMatrix& g, const Location& loc,
                        int num_qubits) {
  const Layout l = layout_for(loc, num_qubits);
  const Eigen::Index n = m.rows();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j & l.mask) continue;
    right_group(m.data(), n, j, g, l);
  }
}

void apply_right_omp(Matrix& m, const GateMatrix& g, const Location& loc,
                     int num_qubits) {
  const Layout l = layout_for(loc, num_qubits);
  const Eigen::Index n = m.rows();
  const Eigen::Index cols = m.cols();
  Complex* data = m.data();
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (j & l.mask) continue;
    right_group(data, n, j, g, l);
  }
}

void apply_left(Matrix& m, const GateMatrix& g, const Location& loc,
                int num_qubits) {
  if (m.rows() >= kParallelDim && !omp_in_parallel()) {
    apply_left_omp(m, g, loc, num_qubits);
  } else {
    apply_left_serial(m, g, loc, num_qubits);
  }
}

void apply_right(Matrix& m, const GateMatrix& g, const Location& loc,
                 int num_qubits) {
  if (m.rows() >= kParallelDim && !omp_in_parallel()) {
    apply_right_omp(m, g, loc, num_qubits);
  } else {
    apply_right_serial(m, g, loc, num_qubits);
  }
}

void environment(const Matrix& left, const Matrix& right, const Location& loc,
                 int num_qubits, GateMatrix& env) {
  const Layout l = layout_for(loc, num_qubits);
  const Eigen::Index n = left.rows();
  env.setZero(l.local_dim, l.local_dim);
  const Complex* lp = left.data();
  const Complex* rp = right.data();
  for (Eigen::Index base = 0; base < n; ++base) {
    if (base & l.mask) continue;
    for (int b = 0; b < l.local_dim; ++b) {
      const Eigen::Index row = base + l.off[b];
      for (int a = 0; a < l.local_dim; ++a) {
        const Complex* rcol = rp + (base + l.off[a]) * n;
        Complex acc{0.0, 0.0};
        for (Eigen::Index k = 0; k < n; ++k) acc += lp[row + k * n] * rcol[k];
        env(b, a) += acc;
      }
    }
  }
}

Complex contract(const GateMatrix& g, const GateMatrix& env) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) acc += g(a, b) * env(b, a);
  }
  return acc;
}

Complex trace_of_product(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, i);
  }
  return acc;
}

}  // namespace qinst::ir::kernels
