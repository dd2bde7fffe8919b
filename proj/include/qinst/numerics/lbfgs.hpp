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
#include <limits>
#include <span>
#include <vector>

namespace qinst::numerics {

struct LbfgsOptions {
  int max_iterations = 1000;
  /// Stop once the largest gradient component is at most this.
  double gradient_tolerance = 1e-12;
  /// Number of correction pairs kept.
  int memory = 10;
  /// Stop when the objective fell by no more than stall_tolerance over the
  /// last stall_window iterations.
  int stall_window = 5;
  double stall_tolerance = 1e-15;
  /// Stop as soon as the objective is at or below this value.
  double target_value = -std::numeric_limits<double>::infinity();
  int max_line_search_evaluations = 25;
};

enum class LbfgsStatus {
  gradient_converged,
  target_reached,
  stalled,
  line_search_failed,
  max_iterations,
};

struct LbfgsResult {
  std::vector<double> x;
  double value;
  int iterations;
  int evaluations;
  LbfgsStatus status;
};

/// Returns f(x) and writes grad f(x).
using Objective = std::function<double(std::span<const double>, std::span<double>)>;

/**
 * Limited-memory BFGS with a strong-Wolfe line search (bracketing followed
 * by safeguarded cubic zoom). The returned point is never worse than x0.
 */
LbfgsResult minimize_lbfgs(const Objective& objective, std::vector<double> x0,
                           const LbfgsOptions& options = {});

}  // namespace qinst::numerics
