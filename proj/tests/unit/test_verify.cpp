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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "../oracle/brute_force.hpp"
#include "../support/generators.hpp"
#include "qinst/error.hpp"
#include "qinst/passes/delete.hpp"
#include "qinst/passes/partition.hpp"
#include "qinst/verify/verify.hpp"

using namespace qinst;
using namespace qinst::ir;
using namespace qinst::verify;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Exact verification examples", "[verify]") {
  std::mt19937_64 rng(41);
  const Circuit c = testgen::random_circuit(3, 15, rng);
  CHECK(verify_exact(c, c).total_distance == 0.0);

  const Circuit bumped = c.append(Operation(gates::rz(), {1}, {1e-3}));
  CHECK_THAT(verify_exact(c, bumped).total_distance,
             WithinRel(1 - std::cos(5e-4), 1e-6));

  const Operation cx(gates::cx(), {0, 1});
  CHECK(verify_exact(Circuit(2, {cx, cx}), Circuit(2)).total_distance == 0.0);
  CHECK_THROWS_AS(verify_exact(Circuit(2), Circuit(3)), ShapeError);
  CHECK_THROWS_AS(verify_exact(Circuit(11), Circuit(11)), CapacityError);
}

TEST_CASE("Upper bound on unchanged sections is zero", "[verify]") {
  std::mt19937_64 rng(42);
  const Circuit c = testgen::random_circuit(2, 10, rng);
  const auto r = verify_upper_bound({{{0, 1}, c, {0, 1}, c}, {{0, 1}, c, {0, 1}, c}});
  CHECK(r.total_distance == 0.0);
  CHECK(r.sections.size() == 2);
  CHECK_THROWS_AS(verify_upper_bound({{{0, 1}, c, {1, 2}, c}}), PairingError);
  CHECK_THROWS_AS(verify_upper_bound({{{0, 1, 2}, c, {0, 1, 2}, c}}), PairingError);
}

TEST_CASE("Upper bound is the sum of sections and bounds the exact distance",
          "[verify]") {
  std::mt19937_64 rng(43);
  passes::DeleteConfig config;
  for (int trial = 0; trial < 3; ++trial) {
    const Circuit c = testgen::random_circuit(5, 25, rng);
    const auto r = passes::delete_gates_partitioned(c, 3, config, 1);
    const double exact = verify_exact(c, r.circuit).total_distance;
    for (int size : {3, 5}) {
      const auto report = verify_upper_bound(resection(r.blocks, 5, size), size);
      double sum = 0;
      for (const auto& s : report.sections) sum += s.distance;
      CHECK(report.total_distance == sum);
      CHECK(report.total_distance >= exact);
    }
  }
}

TEST_CASE("Sections rebuilt from whole circuits", "[verify]") {
  std::mt19937_64 rng(44);
  const Circuit c = testgen::random_circuit(4, 20, rng);
  passes::DeleteConfig config;
  const auto r = passes::delete_gates_partitioned(c, 3, config, 1);
  auto layout = r.blocks;
  for (auto& b : layout) b.original = b.compiled = Circuit(0);
  const auto rebuilt = rebuild_blocks(c, r.circuit, layout);
  for (std::size_t i = 0; i < rebuilt.size(); ++i) {
    CHECK(rebuilt[i].original == r.blocks[i].original);
    CHECK(rebuilt[i].compiled == r.blocks[i].compiled);
  }
  layout[0].span.pop_back();
  CHECK_THROWS_AS(rebuild_blocks(c, r.circuit, layout), PairingError);
}

TEST_CASE("Resolution floor snaps rounding noise", "[verify]") {
  CHECK(resolution_floor(2) >= 1e-14);
  CHECK(resolution_floor(1024) < 1e-11);
  const auto text = format_report(verify_exact(Circuit(2), Circuit(2)));
  CHECK(text.find("mode exact") != std::string::npos);
  CHECK(text.find("total 0.000000e+00") != std::string::npos);
}

TEST_CASE("Composed bound holds where the plain sum can undershoot", "[verify]") {
  // Perturb every parameter by ~1e-3 and compare per-block sections with the
  // dense whole-circuit distance.
  std::mt19937_64 rng(45);
  std::normal_distribution<double> noise(0.0, 1e-3);
  int undershoots = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = testgen::random_circuit(5, 30, rng);
    std::vector<Operation> ops = c.ops();
    for (auto& op : ops) {
      auto p = op.params;
      for (double& v : p) v += noise(rng);
      op = Operation(op.gate, op.location, p);
    }
    const Circuit noisy(5, ops);
    std::vector<passes::BlockRecord> layout;
    const auto part = passes::partition(c, 3);
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
      passes::BlockRecord r;
      r.index = b;
      r.location = part.blocks[b].location;
      r.span = part.blocks[b].span;
      r.compiled_ops = r.span;
      layout.push_back(r);
    }
    const auto report = verify_upper_bound(resection(rebuild_blocks(c, noisy, layout), 5, 3), 3);
    const double exact =
        oracle::hs_distance(oracle::circuit_matrix(c), oracle::circuit_matrix(noisy));
    CHECK(report.composed_bound >= exact);
    CHECK(report.composed_bound >= report.total_distance);
    if (report.total_distance < exact) ++undershoots;
  }
  // The plain sum is not a bound for the squared-type distance; this seed
  // shows it.
  CHECK(undershoots > 0);
}
