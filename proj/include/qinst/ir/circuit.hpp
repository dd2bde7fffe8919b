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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qinst/ir/gate.hpp"
#include "qinst/ir/unitary.hpp"

namespace qinst::ir {

/// Ordered tuple of one or two distinct qubit indices.
class Location {
 public:
  Location() = default;
  Location(std::initializer_list<int> qubits);
  explicit Location(std::span<const int> qubits);

  int size() const { return size_; }
  int operator[](int i) const { return qubits_[i]; }
  const int* begin() const { return qubits_.data(); }
  const int* end() const { return qubits_.data() + size_; }
  bool contains(int q) const;

  bool operator==(const Location& other) const;

 private:
  std::array<int, 2> qubits_{};
  int size_ = 0;
};

/// One gate application. Construction checks arity, distinct qubits and the
/// parameter count.
struct Operation {
  Operation(Gate gate, Location location, std::vector<double> params = {});

  Gate gate;
  Location location;
  std::vector<double> params;

  bool operator==(const Operation& other) const = default;
};

/// Flattened parameter vector: ops in circuit order, each op's parameters in
/// the gate's own order.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> span() const { return values_; }
  std::span<double> span() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const ParamVector& other) const = default;

 private:
  std::vector<double> values_;
};

struct GateCounts {
  int one_qubit = 0;
  int two_qubit = 0;

  int total() const { return one_qubit + two_qubit; }
  bool operator==(const GateCounts& other) const = default;
};

/**
 * Immutable ordered list of operations on num_qubits qubits; the list is
 * composed left to right, so ops()[0] is applied first. Edits return new
 * circuits and never modify the receiver.
 */
class Circuit {
 public:
  explicit Circuit(int num_qubits, std::vector<Operation> ops = {});

  int num_qubits() const { return num_qubits_; }
  const std::vector<Operation>& ops() const { return ops_; }
  const Operation& op(std::size_t i) const { return ops_[i]; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  int num_params() const;
  ParamVector params() const;
  /// Throws ArityError if the vector length differs from num_params().
  Circuit with_params(const ParamVector& params) const;

  Circuit append(Operation op) const;
  Circuit remove_op(std::size_t index) const;
  Circuit insert_op(std::size_t index, Operation op) const;
  /// Removes the ops at the given sorted indices and inserts the replacement
  /// at the position of the first removed op. Every op strictly between the
  /// removed ones must act on qubits disjoint from them.
  Circuit replace_region(std::span<const std::size_t> indices,
                         std::vector<Operation> replacement) const;
  /// Contiguous form: replaces ops [first, last).
  Circuit replace_range(std::size_t first, std::size_t last,
                        std::vector<Operation> replacement) const;
  Circuit concat(const Circuit& tail) const;

  GateCounts counts() const;
  int depth() const;

  /// Unordered qubit pairs touched by some two-qubit op, as (min, max).
  std::vector<std::array<int, 2>> interaction_pairs() const;

  bool operator==(const Circuit& other) const = default;

 private:
  int num_qubits_;
  std::vector<Operation> ops_;
};

/// Materialises the circuit unitary C(params). Throws CapacityError above
/// max_qubits, ArityError on a parameter-count mismatch.
UnitaryMatrix circuit_unitary(const Circuit& circuit, const ParamVector& params,
                              int max_qubits = kDefaultQubitCap);
UnitaryMatrix circuit_unitary(const Circuit& circuit,
                              int max_qubits = kDefaultQubitCap);

/// Maps every op onto new qubit indices: op qubit q becomes qubit_map[q].
Circuit remap(const Circuit& circuit, std::span<const int> qubit_map,
              int num_qubits);

/**
 * Maximal run of gates whose qubit support is one pair. `ops` holds sorted
 * indices into the circuit; it always starts and ends with a two-qubit op.
 */
struct Region {
  std::array<int, 2> pair;  // qubits in the order of the opening op
  std::vector<std::size_t> ops;

  bool operator==(const Region& other) const = default;
};

/**
 * Groups two-qubit interactions in a single left-to-right scan. A region
 * opens at the first unassigned two-qubit op on {a, b}, absorbs later ops
 * acting only within {a, b}, skips ops disjoint from {a, b} and closes at the
 * first op touching exactly one of a, b together with another qubit.
 * Single-qubit ops are kept only when sandwiched between two-qubit ops of the
 * region.
 */
std::vector<Region> group_interactions(const Circuit& circuit);

}  // namespace qinst::ir
