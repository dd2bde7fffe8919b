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
#include <set>

#include "../oracle/brute_force.hpp"
#include "../support/generators.hpp"
#include "qinst/error.hpp"
#include "qinst/numerics/distance.hpp"
#include "qinst/passes/delete.hpp"
#include "qinst/passes/partition.hpp"
#include "qinst/passes/pipeline.hpp"
#include "qinst/passes/retarget.hpp"

using namespace qinst;
using namespace qinst::ir;
using namespace qinst::passes;

namespace {

const Operation kCx01(gates::cx(), {0, 1});

double exact_distance(const Circuit& a, const Circuit& b) {
  return oracle::hs_distance(oracle::circuit_matrix(a), oracle::circuit_matrix(b));
}

bool is_subsequence(const Circuit& small, const Circuit& big) {
  std::size_t j = 0;
  for (const auto& op : small.ops()) {
    while (j < big.size() &&
           !(big.op(j).gate == op.gate && big.op(j).location == op.location)) {
      ++j;
    }
    if (j == big.size()) return false;
    ++j;
  }
  return true;
}

std::set<std::array<int, 2>> pairs_of(const Circuit& c) {
  const auto v = c.interaction_pairs();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("Partition examples", "[passes]") {
  CHECK_THROWS_AS(partition(Circuit(2, {kCx01}), 1), PartitionError);

  const Circuit two(2, {kCx01, Operation(gates::h(), {1}), kCx01});
  const Partition p1 = partition(two, 3);
  REQUIRE(p1.blocks.size() == 1);
  CHECK(p1.blocks[0].span == std::vector<std::size_t>{0, 1, 2});

  const Circuit chain(4, {kCx01, Operation(gates::cx(), {1, 2}), Operation(gates::cx(), {2, 3})});
  const Partition p2 = partition(chain, 3);
  REQUIRE(p2.blocks.size() == 2);
  CHECK(p2.blocks[0].location == std::vector<int>{0, 1, 2});
  CHECK(p2.blocks[0].span == std::vector<std::size_t>{0, 1});
  CHECK(p2.blocks[1].location == std::vector<int>{2, 3});
  CHECK(p2.blocks[1].span == std::vector<std::size_t>{2});

  CHECK(reassemble(p1) == two);
  CHECK(reassemble(p2) == chain);
}

TEST_CASE("Partition round-trips random circuits op for op", "[passes]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = testgen::random_circuit(6, 40, rng);
    for (int size : {2, 3, 4}) {
      const Partition p = partition(c, size);
      std::vector<int> owners(c.size(), 0);
      for (const auto& b : p.blocks) {
        CHECK(static_cast<int>(b.location.size()) <= size);
        for (std::size_t idx : b.span) ++owners[idx];
      }
      for (int o : owners) CHECK(o == 1);
      CHECK(reassemble(p) == c);
    }
  }
}

TEST_CASE("Reassembly rejects overlapping spans", "[passes]") {
  const Circuit c(2, {kCx01, kCx01});
  Partition p = partition(c, 2);
  p.blocks.push_back(p.blocks[0]);
  CHECK_THROWS_AS(reassemble(p), ConsistencyError);
}

TEST_CASE("Gate deletion examples", "[passes]") {
  DeleteConfig config;
  const auto r = delete_gates(Circuit(2, {kCx01, kCx01}), config);
  CHECK(r.circuit.empty());

  std::mt19937_64 rng(32);
  const Circuit two_u3(1, {Operation(gates::u3(), {0}, testgen::random_params(gates::u3(), rng)),
                           Operation(gates::u3(), {0}, testgen::random_params(gates::u3(), rng))});
  const auto r2 = delete_gates(two_u3, config);
  CHECK(r2.circuit.size() == 1);
  CHECK(exact_distance(r2.circuit, two_u3) <= 1e-10);

  const auto r3 = delete_gates(Circuit(2, {kCx01}), config);
  CHECK(r3.circuit.size() == 1);
  // No gate-free circuit reaches CNOT.
  CHECK(numerics::instantiate(Circuit(2, {Operation(gates::u3(), {0}, {0, 0, 0}),
                                          Operation(gates::u3(), {1}, {0, 0, 0})}),
                              gates::cx().unitary(), {})
            .distance > 1e-10);

  config.epsilon = 0;
  CHECK_THROWS_AS(delete_gates(two_u3, config), ConfigError);
}

TEST_CASE("Deletion keeps a subsequence within epsilon", "[passes]") {
  std::mt19937_64 rng(33);
  DeleteConfig config;
  for (int trial = 0; trial < 6; ++trial) {
    const Circuit c = testgen::random_circuit(3, 14, rng);
    const auto r = delete_gates(c, config);
    CHECK(is_subsequence(r.circuit, c));
    CHECK(r.kept.size() == r.circuit.size());
    CHECK(exact_distance(r.circuit, c) <= 1e-10);
    CHECK(r.distance <= 1e-10);
  }
}

TEST_CASE("Sweep limit bounds the number of sweeps", "[passes]") {
  std::mt19937_64 rng(34);
  const auto seeded = testgen::seed_inverse_pairs(testgen::random_circuit(3, 10, rng), 3, rng);
  DeleteConfig config;
  config.max_sweeps = 1;
  CHECK(delete_gates(seeded.circuit, config).sweeps == 1);
}

TEST_CASE("Partitioned deletion", "[passes]") {
  std::mt19937_64 rng(35);
  DeleteConfig config;
  for (int trial = 0; trial < 4; ++trial) {
    const auto seeded = testgen::seed_inverse_pairs(testgen::random_circuit(5, 20, rng), 4, rng);
    const auto r = delete_gates_partitioned(seeded.circuit, 3, config, 1);
    CHECK(r.circuit.size() + seeded.seeded_gates <= seeded.circuit.size());
    CHECK(is_subsequence(r.circuit, seeded.circuit));
    double sum = 0;
    for (const auto& b : r.blocks) {
      CHECK(b.residual <= config.epsilon);
      sum += b.residual;
    }
    CHECK(sum <= r.blocks.size() * config.epsilon);
    CHECK(exact_distance(r.circuit, seeded.circuit) <= 1e-9);
  }

  // A single block reduces to the direct pass.
  const Circuit c = testgen::random_circuit(3, 12, rng);
  const auto direct = delete_gates(c, config);
  const auto single = delete_gates_partitioned(c, 3, config, 1);
  CHECK(single.blocks.size() == 1);
  CHECK(single.circuit == direct.circuit);
}

TEST_CASE("Template construction", "[passes]") {
  const auto one = build_templates({0, 1}, GateSet::of({gates::cz()}), 3);
  REQUIRE(one.size() == 4);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].counts() == GateCounts{static_cast<int>(2 + 2 * k), static_cast<int>(k)});
  }
  const auto two = build_templates({0, 1}, GateSet::of({gates::sqisw(), gates::syc()}), 3);
  REQUIRE(two.size() == 7);
  CHECK(two[1].op(2).gate == gates::sqisw());
  CHECK(two[2].op(2).gate == gates::syc());
  CHECK(build_templates({0, 1}, GateSet::of({gates::cz()}), 0).size() == 1);

  const GateSet capped({{gates::cz(), 1}, {gates::sqisw(), 3}});
  CHECK(build_templates({0, 1}, capped, 3).size() == 5);
}

TEST_CASE("Retarget examples", "[passes]") {
  const Circuit cnot(2, {kCx01});
  for (const Gate& g : {gates::cz(), gates::zz()}) {
    RetargetConfig config(GateSet::of({g}));
    const auto r = retarget(cnot, config);
    CHECK(r.circuit.counts().two_qubit == 1);
    for (const auto& op : r.circuit.ops()) CHECK(config.target.contains(op.gate));
    CHECK(exact_distance(r.circuit, cnot) <= 1e-10);
  }

  RetargetConfig cz(GateSet::of({gates::cz()}));
  const auto identity = retarget(Circuit(2, {kCx01, kCx01}), cz);
  CHECK(identity.circuit.counts().two_qubit == 0);

  const Circuit swap(2, {kCx01, Operation(gates::cx(), {1, 0}), kCx01});
  const auto s = retarget(swap, cz);
  CHECK(s.circuit.counts().two_qubit == 3);
  CHECK(exact_distance(s.circuit, swap) <= 1e-10);

  RetargetConfig shallow(GateSet::of({gates::cz()}));
  shallow.max_block_gates = 2;
  CHECK_THROWS_AS(retarget(swap, shallow), RetargetError);
}

TEST_CASE("Partitioned retargeting stays on interacting pairs", "[passes]") {
  std::mt19937_64 rng(36);
  RetargetConfig config(GateSet::of({gates::sqisw()}));
  for (int trial = 0; trial < 3; ++trial) {
    const Circuit c = testgen::random_cnot_circuit(4, 16, rng);
    const auto r = retarget_partitioned(c, 3, config, 1);
    for (const auto& op : r.circuit.ops()) CHECK(config.target.contains(op.gate));
    const auto before = pairs_of(c);
    for (const auto& p : pairs_of(r.circuit)) CHECK(before.count(p) == 1);
    CHECK(exact_distance(r.circuit, c) <= 1e-9);
  }
}

TEST_CASE("Pipeline reports per-pass counts", "[passes]") {
  std::vector<std::unique_ptr<Pass>> pipeline;
  CHECK_THROWS_AS(run_pipeline(Circuit(2), pipeline), ConfigError);

  pipeline.push_back(std::make_unique<DeletePass>(3, DeleteConfig{}, 1));
  pipeline.push_back(
      std::make_unique<RetargetPass>(3, RetargetConfig(GateSet::of({gates::cz()})), 1));
  auto [out, report] = run_pipeline(Circuit(2, {kCx01, kCx01}), pipeline);
  CHECK(out.empty());
  REQUIRE(report.passes.size() == 2);
  CHECK(report.passes[0].before.two_qubit == 2);
  CHECK(report.passes[0].after.two_qubit == 0);
  CHECK(report.passes[1].after.two_qubit == 0);

  std::mt19937_64 rng(37);
  const Circuit c = testgen::random_cnot_circuit(4, 20, rng);
  auto [out2, report2] = run_pipeline(c, pipeline);
  const auto [one, two] = oracle::recount(out2);
  CHECK(report2.passes.back().after == GateCounts{one, two});
  CHECK(report2.passes.front().before == GateCounts{oracle::recount(c).first,
                                                    oracle::recount(c).second});
}
