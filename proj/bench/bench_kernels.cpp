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

// Serial reference kernels against their OpenMP counterparts, and the
// partitioned deletion driver at one thread against all threads.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

#include "qinst/ir/circuit.hpp"
#include "qinst/ir/kernels.hpp"
#include "qinst/passes/delete.hpp"

using namespace qinst;
using namespace qinst::ir;

namespace {

Matrix random_matrix(int n) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = Complex(d(rng), d(rng));
  }
  return m;
}

template <void (*Kernel)(Matrix&, const GateMatrix&, const Location&, int)>
void BM_TwoQubitLeft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m = random_matrix(n);
  const GateMatrix g = gates::syc().unitary().matrix();
  const Location loc{n - 1, 0};
  for (auto _ : state) {
    Kernel(m, g, loc, n);
    benchmark::DoNotOptimize(m.data());
  }
  state.SetItemsProcessed(state.iterations() * m.size());
}

template <void (*Kernel)(Matrix&, const GateMatrix&, const Location&, int)>
void BM_TwoQubitRight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m = random_matrix(n);
  const GateMatrix g = gates::syc().unitary().matrix();
  const Location loc{1, n - 2};
  for (auto _ : state) {
    Kernel(m, g, loc, n);
    benchmark::DoNotOptimize(m.data());
  }
  state.SetItemsProcessed(state.iterations() * m.size());
}

Circuit cnot_chain(int n, int layers) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(-3.14, 3.14);
  std::vector<Operation> ops;
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q + 1 < n; ++q) {
      ops.emplace_back(gates::cx(), Location{q, q + 1});
      ops.emplace_back(gates::u3(), Location{q + 1},
                       std::vector<double>{angle(rng), angle(rng), angle(rng)});
      ops.emplace_back(gates::cx(), Location{q, q + 1});
    }
  }
  return Circuit(n, std::move(ops));
}

void BM_PartitionedDelete(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const Circuit c = cnot_chain(8, 2);
  passes::DeleteConfig config;
  for (auto _ : state) {
    auto r = passes::delete_gates_partitioned(c, 3, config, jobs);
    benchmark::DoNotOptimize(r.circuit.size());
  }
  state.counters["threads"] = jobs > 0 ? jobs : omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_TwoQubitLeft<kernels::apply_left_serial>)->Name("left/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_TwoQubitLeft<kernels::apply_left_omp>)->Name("left/omp")->DenseRange(6, 10, 2);
BENCHMARK(BM_TwoQubitRight<kernels::apply_right_serial>)->Name("right/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_TwoQubitRight<kernels::apply_right_omp>)->Name("right/omp")->DenseRange(6, 10, 2);
BENCHMARK(BM_PartitionedDelete)->Name("delete_partitioned/jobs")->Arg(1)->Arg(0)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
