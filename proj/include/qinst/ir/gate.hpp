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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qinst/ir/unitary.hpp"

namespace qinst::ir {

/// Gate-local matrix: 2x2 or 4x4 with inline storage.
using GateMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

/**
 * A fixed or parameterised one- or two-qubit unitary generator.
 *
 * Gates are cheap handles onto an immutable definition. Two gates compare
 * equal when their names agree: the name is the gate's identity in the
 * registry and in OpenQASM files.
 */
class Gate {
 public:
  using Generator = std::function<void(std::span<const double>, GateMatrix&)>;
  /// Fills one matrix per parameter with dU/dtheta_i.
  using Partials =
      std::function<void(std::span<const double>, std::span<GateMatrix>)>;

  Gate(std::string name, int arity, int num_params, Generator generator,
       Partials partials);

  /// A parameter-free gate with the given matrix; rejects non-unitary input.
  static Gate fixed(std::string name, const Matrix& matrix);

  const std::string& name() const { return def_->name; }
  int arity() const { return def_->arity; }
  int num_params() const { return def_->num_params; }
  int dim() const { return 1 << def_->arity; }
  bool is_fixed() const { return def_->num_params == 0; }

  /// Throws ArityError when params.size() != num_params().
  UnitaryMatrix unitary(std::span<const double> params = {}) const;
  std::vector<Matrix> partials(std::span<const double> params) const;

  // Unchecked hot-path variants used by the evaluation kernels.
  void unitary_into(std::span<const double> params, GateMatrix& out) const;
  void partials_into(std::span<const double> params,
                     std::span<GateMatrix> out) const;

  bool operator==(const Gate& other) const {
    return def_ == other.def_ || def_->name == other.def_->name;
  }

 private:
  struct Definition {
    std::string name;
    int arity;
    int num_params;
    Generator generator;
    Partials partials;
  };
  std::shared_ptr<const Definition> def_;
};

/// Built-in gate library. Names are the lowercase OpenQASM spellings.
namespace gates {

const Gate& u3();   // U3(theta, phi, lambda), the standard universal rotation
const Gate& rx();   // exp(-i theta X / 2)
const Gate& ry();   // exp(-i theta Y / 2)
const Gate& rz();   // exp(-i theta Z / 2)
const Gate& rzz();  // exp(-i theta Z(x)Z / 2)
const Gate& rxx();  // exp(-i theta X(x)X / 2)
const Gate& x();
const Gate& h();
const Gate& sx();
const Gate& cx();     // CNOT, control is the first location qubit
const Gate& cz();
const Gate& xx();     // exp(-i pi/4 X(x)X)
const Gate& zz();     // exp(-i pi/4 Z(x)Z)
const Gate& sqisw();  // sqrt(iSWAP)
const Gate& syc();    // fSim(pi/2, pi/6)

/// fSim(theta, phi) as a fixed matrix.
Matrix fsim_matrix(double theta, double phi);

/// Every built-in gate in registry order.
const std::vector<Gate>& all();

std::optional<Gate> lookup(const std::string& name);

}  // namespace gates
}  // namespace qinst::ir
