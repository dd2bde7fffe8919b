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

#include "qinst/ir/circuit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qinst/error.hpp"
#include "qinst/ir/kernels.hpp"

namespace qinst::ir {
namespace {

void check_location(std::span<const int> qubits) {
  if (qubits.size() != 1 && qubits.size() != 2) {
    throw ArityError("location must name one or two qubits, got " +
                     std::to_string(qubits.size()));
  }
  for (int q : qubits) {
    if (q < 0) throw BoundsError("negative qubit index " + std::to_string(q));
  }
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw ArityError("location qubits must be distinct, got " +
                     std::to_string(qubits[0]) + " twice");
  }
}

}  // namespace

Location::Location(std::initializer_list<int> qubits)
    : Location(std::span<const int>(qubits.begin(), qubits.size())) {}

Location::Location(std::span<const int> qubits) {
  check_location(qubits);
  size_ = static_cast<int>(qubits.size());
  std::copy(qubits.begin(), qubits.end(), qubits_.begin());
}

bool Location::contains(int q) const {
  return std::find(begin(), end(), q) != end();
}

bool Location::operator==(const Location& other) const {
  return size_ == other.size_ && std::equal(begin(), end(), other.begin());
}

Operation::Operation(Gate g, Location loc, std::vector<double> p)
    : gate(std::move(g)), location(loc), params(std::move(p)) {
  if (location.size() != gate.arity()) {
    throw ArityError("gate '" + gate.name() + "' acts on " +
                     std::to_string(gate.arity()) + " qubits but location has " +
                     std::to_string(location.size()));
  }
  if (static_cast<int>(params.size()) != gate.num_params()) {
    throw ArityError("gate '" + gate.name() + "' expects " +
                     std::to_string(gate.num_params()) + " parameters, got " +
                     std::to_string(params.size()));
  }
}

Circuit::Circuit(int num_qubits, std::vector<Operation> ops)
    : num_qubits_(num_qubits), ops_(std::move(ops)) {
  if (num_qubits_ < 0) {
    throw BoundsError("circuit cannot have a negative qubit count");
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    for (int q : ops_[i].location) {
      if (q >= num_qubits_) {
        throw BoundsError("op " + std::to_string(i) + " uses qubit " +
                          std::to_string(q) + " of a " +
                          std::to_string(num_qubits_) + "-qubit circuit");
      }
    }
  }
}

int Circuit::num_params() const {
  int k = 0;
  for (const auto& op : ops_) k += op.gate.num_params();
  return k;
}

ParamVector Circuit::params() const {
  std::vector<double> values;
  values.reserve(num_params());
  for (const auto& op : ops_) {
    values.insert(values.end(), op.params.begin(), op.params.end());
  }
  return ParamVector(std::move(values));
}

Circuit Circuit::with_params(const ParamVector& params) const {
  if (static_cast<int>(params.size()) != num_params()) {
    throw ArityError("circuit has " + std::to_string(num_params()) +
                     " parameters, got " + std::to_string(params.size()));
  }
  Circuit out = *this;
  std::size_t k = 0;
  for (auto& op : out.ops_) {
    for (auto& p : op.params) p = params[k++];
  }
  return out;
}

Circuit Circuit::append(Operation op) const {
  return insert_op(ops_.size(), std::move(op));
}

Circuit Circuit::remove_op(std::size_t index) const {
  if (index >= ops_.size()) {
    throw BoundsError("remove_op index " + std::to_string(index) +
                      " out of range for " + std::to_string(ops_.size()) +
                      " ops");
  }
  std::vector<Operation> ops = ops_;
  ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(index));
  return Circuit(num_qubits_, std::move(ops));
}

Circuit Circuit::insert_op(std::size_t index, Operation op) const {
  if (index > ops_.size()) {
    throw BoundsError("insert_op index " + std::to_string(index) +
                      " out of range for " + std::to_string(ops_.size()) +
                      " ops");
  }
  std::vector<Operation> ops = ops_;
  ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(index), std::move(op));
  return Circuit(num_qubits_, std::move(ops));
}

Circuit Circuit::replace_region(std::span<const std::size_t> indices,
                                std::vector<Operation> replacement) const {
  if (indices.empty()) throw BoundsError("replace_region with no indices");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= ops_.size()) {
      throw BoundsError("replace_region index " + std::to_string(indices[i]) +
                        " out of range for " + std::to_string(ops_.size()) +
                        " ops");
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw BoundsError("replace_region indices must be strictly increasing");
    }
  }
  std::vector<Operation> ops;
  ops.reserve(ops_.size() - indices.size() + replacement.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (next < indices.size() && indices[next] == i) {
      if (next == 0) {
        for (auto& r : replacement) ops.push_back(std::move(r));
      }
      ++next;
      continue;
    }
    ops.push_back(ops_[i]);
  }
  return Circuit(num_qubits_, std::move(ops));
}

Circuit Circuit::replace_range(std::size_t first, std::size_t last,
                               std::vector<Operation> replacement) const {
  if (first > last || last > ops_.size()) {
    throw BoundsError("replace_range [" + std::to_string(first) + ", " +
                      std::to_string(last) + ") out of range for " +
                      std::to_string(ops_.size()) + " ops");
  }
  std::vector<Operation> ops(ops_.begin(),
                             ops_.begin() + static_cast<std::ptrdiff_t>(first));
  for (auto& r : replacement) ops.push_back(std::move(r));
  ops.insert(ops.end(), ops_.begin() + static_cast<std::ptrdiff_t>(last),
             ops_.end());
  return Circuit(num_qubits_, std::move(ops));
}

Circuit Circuit::concat(const Circuit& tail) const {
  if (tail.num_qubits_ != num_qubits_) {
    throw ShapeError("cannot concatenate circuits on " +
                     std::to_string(num_qubits_) + " and " +
                     std::to_string(tail.num_qubits_) + " qubits");
  }
  std::vector<Operation> ops = ops_;
  ops.insert(ops.end(), tail.ops_.begin(), tail.ops_.end());
  return Circuit(num_qubits_, std::move(ops));
}

GateCounts Circuit::counts() const {
  GateCounts c;
  for (const auto& op : ops_) {
    if (op.gate.arity() == 1) {
      ++c.one_qubit;
    } else {
      ++c.two_qubit;
    }
  }
  return c;
}

int Circuit::depth() const {
  std::vector<int> level(num_qubits_, 0);
  int depth = 0;
  for (const auto& op : ops_) {
    int l = 0;
    for (int q : op.location) l = std::max(l, level[q]);
    ++l;
    for (int q : op.location) level[q] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

std::vector<std::array<int, 2>> Circuit::interaction_pairs() const {
  std::set<std::array<int, 2>> pairs;
  for (const auto& op : ops_) {
    if (op.location.size() == 2) {
      pairs.insert({std::min(op.location[0], op.location[1]),
                    std::max(op.location[0], op.location[1])});
    }
  }
  return {pairs.begin(), pairs.end()};
}

UnitaryMatrix circuit_unitary(const Circuit& circuit, const ParamVector& params,
                              int max_qubits) {
  if (circuit.num_qubits() > max_qubits) {
    throw CapacityError("cannot materialise a " +
                        std::to_string(circuit.num_qubits()) +
                        "-qubit unitary (cap is " + std::to_string(max_qubits) +
                        " qubits)");
  }
  if (static_cast<int>(params.size()) != circuit.num_params()) {
    throw ArityError("circuit has " + std::to_string(circuit.num_params()) +
                     " parameters, got " + std::to_string(params.size()));
  }
  const int n = circuit.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  GateMatrix g;
  std::size_t offset = 0;
  for (const auto& op : circuit.ops()) {
    const int k = op.gate.num_params();
    op.gate.unitary_into(params.span().subspan(offset, k), g);
    offset += k;
    kernels::apply_left(m, g, op.location, n);
  }
  return UnitaryMatrix::unchecked(std::move(m));
}

UnitaryMatrix circuit_unitary(const Circuit& circuit, int max_qubits) {
  return circuit_unitary(circuit, circuit.params(), max_qubits);
}

Circuit remap(const Circuit& circuit, std::span<const int> qubit_map,
              int num_qubits) {
  std::vector<Operation> ops;
  ops.reserve(circuit.size());
  for (const auto& op : circuit.ops()) {
    std::array<int, 2> q{};
    for (int i = 0; i < op.location.size(); ++i) {
      if (op.location[i] >= static_cast<int>(qubit_map.size())) {
        throw BoundsError("qubit " + std::to_string(op.location[i]) +
                          " missing from remap table");
      }
      q[i] = qubit_map[op.location[i]];
    }
    ops.emplace_back(op.gate,
                     Location(std::span<const int>(q.data(), op.location.size())),
                     op.params);
  }
  return Circuit(num_qubits, std::move(ops));
}

}  // namespace qinst::ir
