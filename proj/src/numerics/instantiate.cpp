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

#include "qinst/numerics/instantiate.hpp"

#include <numbers>
#include <random>
#include <string>

#include "qinst/error.hpp"
#include "qinst/numerics/distance.hpp"
#include "qinst/numerics/evaluator.hpp"
#include "qinst/numerics/lbfgs.hpp"

namespace qinst::numerics {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ index);
}

void InstantiationConfig::validate() const {
  if (!(threshold > 0)) {
    throw ConfigError("instantiation threshold must be positive");
  }
  if (multistarts < 1) {
    throw ConfigError("multistarts must be at least 1, got " +
                      std::to_string(multistarts));
  }
  if (max_iterations < 1) {
    throw ConfigError("max_iterations must be at least 1");
  }
}

InstantiationResult instantiate(const ir::Circuit& circuit,
                                const ir::ParamVector& warm_start,
                                const ir::UnitaryMatrix& target,
                                const InstantiationConfig& config) {
  config.validate();
  CircuitEvaluator eval(circuit, target);
  if (static_cast<int>(warm_start.size()) != eval.num_params()) {
    throw ArityError("warm start has " + std::to_string(warm_start.size()) +
                     " parameters, circuit has " +
                     std::to_string(eval.num_params()));
  }
  const int dim = eval.dim();
  if (eval.num_params() == 0) {
    return {warm_start, distance_from_trace(eval.trace({}), dim), 1};
  }

  const Objective objective = [&eval](std::span<const double> x,
                                      std::span<double> g) {
    return eval.distance_and_gradient(x, g);
  };
  LbfgsOptions options;
  options.max_iterations = config.max_iterations;
  options.gradient_tolerance = config.gradient_tolerance;

  InstantiationResult best{warm_start, 2.0, 0};
  for (int start = 0; start < config.multistarts; ++start) {
    std::vector<double> x0;
    if (start == 0) {
      x0 = warm_start.values();
    } else {
      std::mt19937_64 rng(derive_seed(config.seed, 0, start));
      std::uniform_real_distribution<double> uniform(-std::numbers::pi,
                                                     std::numbers::pi);
      x0.resize(eval.num_params());
      for (auto& v : x0) v = uniform(rng);
    }
    LbfgsResult run = minimize_lbfgs(objective, std::move(x0), options);
    const double d = distance_from_trace(eval.trace(run.x), dim);
    if (d < best.distance) {
      best.params = ir::ParamVector(std::move(run.x));
      best.distance = d;
    }
    best.starts_used = start + 1;
    if (best.distance <= config.threshold) break;
  }
  return best;
}

InstantiationResult instantiate(const ir::Circuit& circuit,
                                const ir::UnitaryMatrix& target,
                                const InstantiationConfig& config) {
  return instantiate(circuit, circuit.params(), target, config);
}

}  // namespace qinst::numerics
