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

#include <CLI11.hpp>

#include "qinst/cli/commands.hpp"

namespace qinst::cli {
namespace {

void add_common(CLI::App* cmd, std::string& in, std::string& out, std::string& report,
                int& multistarts, double& epsilon, std::uint64_t& seed, int& jobs) {
  cmd->add_option("--in", in, "Input OpenQASM 2.0 file")->required();
  cmd->add_option("--out", out, "Output OpenQASM 2.0 file")->required();
  cmd->add_option("--report", report, "Write a JSON pass report here");
  cmd->add_option("--multistarts", multistarts, "Starting points per instantiation")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  cmd->add_option("--epsilon", epsilon, "Acceptance threshold on the distance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", seed, "Base seed for random restarts")->capture_default_str();
  cmd->add_option("--jobs", jobs, "Worker threads; 0 uses all available")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instantiation-based circuit optimisation and retargeting", "qinst"};
  app.require_subcommand(1);

  OptimizeOptions optimize;
  auto* opt = app.add_subcommand("optimize", "Delete gates by re-instantiation");
  add_common(opt, optimize.in, optimize.out, optimize.report, optimize.multistarts,
             optimize.epsilon, optimize.seed, optimize.jobs);
  opt->add_option("--block-size", optimize.block_size, "Qubits per block")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  opt->add_option("--max-sweeps", optimize.max_sweeps, "Sweep limit (default unbounded)")
      ->check(CLI::PositiveNumber);

  RetargetOptions retarget;
  auto* ret = app.add_subcommand("retarget", "Rewrite into a target gate-set");
  add_common(ret, retarget.in, retarget.out, retarget.report, retarget.multistarts,
             retarget.epsilon, retarget.seed, retarget.jobs);
  ret->add_option("--target", retarget.target,
                  "Gate-set name, comma-separated gate list or gate-set file")
      ->required();
  ret->add_option("--block-size", retarget.block_size, "Qubits per block")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  ret->add_option("--max-gates", retarget.max_gates,
                  "Two-qubit gates per template at most")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  VerifyOptions verify;
  auto* ver = app.add_subcommand("verify", "Compare a compiled circuit with its original");
  ver->add_option("--in", verify.in, "Original circuit")->required();
  ver->add_option("--compiled", verify.compiled, "Compiled circuit")->required();
  ver->add_option("--report", verify.report, "Pass report of the compiling run");
  ver->add_option("--out", verify.out, "Write a JSON verification report here");
  ver->add_option("--mode", verify.mode, "auto, exact or bound")->capture_default_str();
  ver->add_option("--section-size", verify.section_size, "Qubits per section in bound mode")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  ver->add_option("--epsilon", verify.epsilon, "Allowed distance per section")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--jobs", verify.jobs, "Worker threads; 0 uses all available")
      ->check(CLI::NonNegativeNumber);

  StatsOptions stats;
  auto* sta = app.add_subcommand("stats", "Print gate counts and depth");
  sta->add_option("--in", stats.in, "Input circuit")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    err << "run 'qinst --help' for usage\n";
    return kUsage;
  }

  if (opt->parsed()) return cmd_optimize(optimize, out, err);
  if (ret->parsed()) return cmd_retarget(retarget, out, err);
  if (ver->parsed()) return cmd_verify(verify, out, err);
  return cmd_stats(stats, out, err);
}

}  // namespace qinst::cli
