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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qinst::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kPassFailure = 3,
  kOverThreshold = 4,
};

struct OptimizeOptions {
  std::string in;
  std::string out;
  std::string report;
  int block_size = 3;
  int multistarts = 4;
  double epsilon = 1e-10;
  std::optional<int> max_sweeps;
  std::uint64_t seed = 0;
  int jobs = 0;
};

struct RetargetOptions {
  std::string in;
  std::string out;
  std::string report;
  std::string target;
  int block_size = 3;
  int max_gates = 3;
  int multistarts = 4;
  double epsilon = 1e-10;
  std::uint64_t seed = 0;
  int jobs = 0;
};

struct VerifyOptions {
  std::string in;
  std::string compiled;
  /// Pass report of the run that produced `compiled`; needed for the bound.
  std::string report;
  /// Optional verification document.
  std::string out;
  std::string mode = "auto";  // auto | exact | bound
  int section_size = 8;
  double epsilon = 1e-10;
  int jobs = 0;
};

struct StatsOptions {
  std::string in;
};

// Each command reports progress on `out`, problems on `err`, and returns an
// ExitCode. Library errors are mapped to exit codes rather than thrown.
int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_retarget(const RetargetOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qinst::cli
