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

#include "qinst/cli/commands.hpp"

#include <cstdio>
#include <functional>
#include <memory>

#include "qinst/error.hpp"
#include "qinst/io/gate_set_spec.hpp"
#include "qinst/io/qasm.hpp"
#include "qinst/io/report.hpp"
#include "qinst/passes/pipeline.hpp"
#include "qinst/verify/verify.hpp"

namespace qinst::cli {
namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const QasmError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PairingError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPassFailure;
  }
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void print_summary(std::ostream& out, const passes::PassReport& report) {
  for (const auto& rec : report.passes) {
    out << rec.pass << ": 2q " << rec.before.two_qubit << " -> " << rec.after.two_qubit
        << ", 1q " << rec.before.one_qubit << " -> " << rec.after.one_qubit << ", "
        << rec.blocks.size() << " blocks, sweeps " << rec.sweeps << ", "
        << fmt("%.1f", rec.wall_ms) << " ms\n";
  }
}

int finish_pass(const ir::Circuit& output, const passes::PassReport& report,
                const io::RunInfo& info, const std::string& report_path,
                std::ostream& out) {
  io::write_qasm_file(info.output, output);
  if (!report_path.empty()) {
    io::write_text_file(report_path, io::dump(io::pass_report_to_json(report, info)));
  }
  print_summary(out, report);
  return kSuccess;
}

}  // namespace

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ir::Circuit input = io::read_qasm_file(opts.in);
    passes::DeleteConfig config;
    config.epsilon = opts.epsilon;
    config.max_sweeps = opts.max_sweeps;
    config.instantiation.multistarts = opts.multistarts;
    config.instantiation.threshold = opts.epsilon;
    config.instantiation.seed = opts.seed;
    std::vector<std::unique_ptr<passes::Pass>> pipeline;
    pipeline.push_back(
        std::make_unique<passes::DeletePass>(opts.block_size, config, opts.jobs));
    auto [output, report] = passes::run_pipeline(input, pipeline);
    return finish_pass(output, report, {"optimize", opts.seed, opts.in, opts.out},
                       opts.report, out);
  });
}

int cmd_retarget(const RetargetOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    passes::RetargetConfig config(io::resolve_gate_set(opts.target));
    const ir::Circuit input = io::read_qasm_file(opts.in);
    config.max_block_gates = opts.max_gates;
    config.epsilon = opts.epsilon;
    config.instantiation.multistarts = opts.multistarts;
    config.instantiation.threshold = opts.epsilon;
    config.instantiation.seed = opts.seed;
    std::vector<std::unique_ptr<passes::Pass>> pipeline;
    pipeline.push_back(
        std::make_unique<passes::RetargetPass>(opts.block_size, config, opts.jobs));
    auto [output, report] = passes::run_pipeline(input, pipeline);
    out << "target: " << config.target.describe() << "\n";
    const int code = finish_pass(output, report, {"retarget", opts.seed, opts.in, opts.out},
                                 opts.report, out);
    out << "two_qubit_ratio " << fmt("%.6g", report.passes.back().two_qubit_ratio()) << "\n";
    return code;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.mode != "auto" && opts.mode != "exact" && opts.mode != "bound") {
      throw ConfigError("--mode must be auto, exact or bound, got '" + opts.mode + "'");
    }
    const ir::Circuit original = io::read_qasm_file(opts.in);
    const ir::Circuit compiled = io::read_qasm_file(opts.compiled);
    if (original.num_qubits() != compiled.num_qubits()) {
      throw PairingError("original has " + std::to_string(original.num_qubits()) +
                         " qubits, compiled has " + std::to_string(compiled.num_qubits()));
    }
    const bool small = original.num_qubits() <= ir::kDefaultQubitCap;
    const bool exact = opts.mode == "exact" || (opts.mode == "auto" && small);

    verify::VerificationReport report;
    double threshold = opts.epsilon;
    if (exact) {
      report = verify::verify_exact(original, compiled);
    } else {
      if (opts.report.empty()) {
        throw ConfigError("upper-bound verification needs the pass report (--report)");
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(io::read_text_file(opts.report));
      } catch (const nlohmann::json::parse_error& e) {
        throw PairingError(std::string("pass report is not valid JSON: ") + e.what());
      }
      const auto blocks = verify::rebuild_blocks(
          original, compiled, io::blocks_from_pass_report(doc));
      for (const auto& b : blocks) {
        if (static_cast<int>(b.location.size()) > opts.section_size) {
          throw ConfigError("section size " + std::to_string(opts.section_size) +
                            " is smaller than a " + std::to_string(b.location.size()) +
                            "-qubit block");
        }
      }
      const auto sections =
          verify::resection(blocks, original.num_qubits(), opts.section_size);
      report = verify::verify_upper_bound(sections, opts.section_size, opts.jobs);
      threshold = opts.epsilon * static_cast<double>(std::max<std::size_t>(1, sections.size()));
    }
    const bool passed = report.total_distance <= threshold;
    out << verify::format_report(report);
    out << "threshold " << fmt("%.6e", threshold) << "\n";
    out << "result " << (passed ? "pass" : "fail") << "\n";
    if (!opts.out.empty()) {
      io::write_text_file(opts.out,
                          io::dump(io::verification_to_json(report, threshold, passed)));
    }
    return passed ? kSuccess : kOverThreshold;
  });
}

int cmd_stats(const StatsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ir::Circuit c = io::read_qasm_file(opts.in);
    const auto counts = c.counts();
    out << "qubits: " << c.num_qubits() << "\n";
    out << "2q: " << counts.two_qubit << ", 1q: " << counts.one_qubit << "\n";
    out << "depth: " << c.depth() << "\n";
    return kSuccess;
  });
}

}  // namespace qinst::cli
