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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qinst/ir/gate.hpp"

namespace qinst::ir::gates {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Complex cis(double angle) { return std::polar(1.0, angle); }

// Parameterised gates are sampled at registration; a generator that is not
// unitary is a library bug, so fail loudly.
Gate checked(Gate g) {
  const double samples[] = {0.0, 0.37, -1.9, 2.6};
  std::vector<double> params(g.num_params());
  for (double s : samples) {
    for (int i = 0; i < g.num_params(); ++i) params[i] = s * (i + 1);
    if (!(g.unitary(params).unitarity_error() <=
          UnitaryMatrix::kUnitarityTolerance)) {
      throw std::logic_error("built-in gate '" + g.name() + "' is not unitary");
    }
  }
  return g;
}

Gate make_u3() {
  return checked(Gate(
      "u3", 1, 3,
      [](std::span<const double> p, GateMatrix& m) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        m(0, 0) = c;
        m(0, 1) = -cis(p[2]) * s;
        m(1, 0) = cis(p[1]) * s;
        m(1, 1) = cis(p[1] + p[2]) * c;
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        const Complex ep = cis(p[1]), el = cis(p[2]), epl = cis(p[1] + p[2]);
        d[0](0, 0) = -s / 2;
        d[0](0, 1) = -el * c / 2.0;
        d[0](1, 0) = ep * c / 2.0;
        d[0](1, 1) = -epl * s / 2.0;

        d[1](0, 0) = 0;
        d[1](0, 1) = 0;
        d[1](1, 0) = kI * ep * s;
        d[1](1, 1) = kI * epl * c;

        d[2](0, 0) = 0;
        d[2](0, 1) = -kI * el * s;
        d[2](1, 0) = 0;
        d[2](1, 1) = kI * epl * c;
      }));
}

Gate make_rx() {
  return checked(Gate(
      "rx", 1, 1,
      [](std::span<const double> p, GateMatrix& m) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        m << c, -kI * s, -kI * s, c;
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        d[0] << -s / 2, -kI * c / 2.0, -kI * c / 2.0, -s / 2;
      }));
}

Gate make_ry() {
  return checked(Gate(
      "ry", 1, 1,
      [](std::span<const double> p, GateMatrix& m) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        m << c, -s, s, c;
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        d[0] << -s / 2, -c / 2, c / 2, -s / 2;
      }));
}

Gate make_rz() {
  return checked(Gate(
      "rz", 1, 1,
      [](std::span<const double> p, GateMatrix& m) {
        m << cis(-p[0] / 2), 0, 0, cis(p[0] / 2);
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        d[0] << -kI / 2.0 * cis(-p[0] / 2), 0, 0, kI / 2.0 * cis(p[0] / 2);
      }));
}

Gate make_rzz() {
  return checked(Gate(
      "rzz", 2, 1,
      [](std::span<const double> p, GateMatrix& m) {
        const Complex a = cis(-p[0] / 2), b = cis(p[0] / 2);
        m.setZero();
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = b;
        m(3, 3) = a;
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        const Complex a = -kI / 2.0 * cis(-p[0] / 2);
        const Complex b = kI / 2.0 * cis(p[0] / 2);
        d[0].setZero();
        d[0](0, 0) = a;
        d[0](1, 1) = b;
        d[0](2, 2) = b;
        d[0](3, 3) = a;
      }));
}

Gate make_rxx() {
  return checked(Gate(
      "rxx", 2, 1,
      [](std::span<const double> p, GateMatrix& m) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        m.setZero();
        for (int i = 0; i < 4; ++i) {
          m(i, i) = c;
          m(i, 3 - i) = -kI * s;
        }
      },
      [](std::span<const double> p, std::span<GateMatrix> d) {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        d[0].setZero();
        for (int i = 0; i < 4; ++i) {
          d[0](i, i) = -s / 2;
          d[0](i, 3 - i) = -kI * c / 2.0;
        }
      }));
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix diag4(Complex a, Complex b, Complex c, Complex d) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

Matrix cx_matrix() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Matrix xx_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = r;
    m(i, 3 - i) = -kI * r;
  }
  return m;
}

Matrix sqisw_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = r;
  m(1, 2) = kI * r;
  m(2, 1) = kI * r;
  m(2, 2) = r;
  m(3, 3) = 1;
  return m;
}

}  // namespace

Matrix fsim_matrix(double theta, double phi) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = std::cos(theta);
  m(1, 2) = -kI * std::sin(theta);
  m(2, 1) = -kI * std::sin(theta);
  m(2, 2) = std::cos(theta);
  m(3, 3) = cis(-phi);
  return m;
}

const Gate& u3() {
  static const Gate g = make_u3();
  return g;
}
const Gate& rx() {
  static const Gate g = make_rx();
  return g;
}
const Gate& ry() {
  static const Gate g = make_ry();
  return g;
}
const Gate& rz() {
  static const Gate g = make_rz();
  return g;
}
const Gate& rzz() {
  static const Gate g = make_rzz();
  return g;
}
const Gate& rxx() {
  static const Gate g = make_rxx();
  return g;
}
const Gate& x() {
  static const Gate g = Gate::fixed("x", mat2(0, 1, 1, 0));
  return g;
}
const Gate& h() {
  const double r = 1.0 / std::sqrt(2.0);
  static const Gate g = Gate::fixed("h", mat2(r, r, r, -r));
  return g;
}
const Gate& sx() {
  const Complex a{0.5, 0.5}, b{0.5, -0.5};
  static const Gate g = Gate::fixed("sx", mat2(a, b, b, a));
  return g;
}
const Gate& cx() {
  static const Gate g = Gate::fixed("cx", cx_matrix());
  return g;
}
const Gate& cz() {
  static const Gate g = Gate::fixed("cz", diag4(1, 1, 1, -1));
  return g;
}
const Gate& xx() {
  static const Gate g = Gate::fixed("xx", xx_matrix());
  return g;
}
const Gate& zz() {
  static const Gate g = Gate::fixed(
      "zz", diag4(cis(-pi / 4), cis(pi / 4), cis(pi / 4), cis(-pi / 4)));
  return g;
}
const Gate& sqisw() {
  static const Gate g = Gate::fixed("sqisw", sqisw_matrix());
  return g;
}
const Gate& syc() {
  static const Gate g = Gate::fixed("syc", fsim_matrix(pi / 2, pi / 6));
  return g;
}

const std::vector<Gate>& all() {
  static const std::vector<Gate> list{u3(), rx(),  ry(), rz(), rzz(),
                                      rxx(), x(),   h(),  sx(), cx(),
                                      cz(),  xx(),  zz(), sqisw(), syc()};
  return list;
}

std::optional<Gate> lookup(const std::string& name) {
  for (const auto& g : all()) {
    if (g.name() == name) return g;
  }
  return std::nullopt;
}

}  // namespace qinst::ir::gates
