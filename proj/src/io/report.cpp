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

#include "qinst/io/report.hpp"

#include "qinst/error.hpp"

namespace qinst::io {
namespace {

using nlohmann::json;

json counts_to_json(const ir::GateCounts& c) {
  return {{"1q", c.one_qubit}, {"2q", c.two_qubit}};
}

template <class T>
std::vector<T> array_of(const json& block, const char* key) {
  if (!block.contains(key) || !block[key].is_array()) {
    throw PairingError(std::string("report block lacks an array \"") + key + "\"");
  }
  std::vector<T> out;
  for (const auto& v : block[key]) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw PairingError(std::string("report block field \"") + key +
                         "\" must hold non-negative integers");
    }
    out.push_back(v.get<T>());
  }
  return out;
}

}  // namespace

json pass_report_to_json(const passes::PassReport& report, const RunInfo& info) {
  json passes = json::array();
  for (const auto& rec : report.passes) {
    json blocks = json::array();
    for (const auto& b : rec.blocks) {
      blocks.push_back({{"index", b.index},
                        {"location", b.location},
                        {"span", b.span},
                        {"compiled_ops", b.compiled_ops},
                        {"residual", b.residual},
                        {"sweeps", b.sweeps}});
    }
    passes.push_back({{"pass", rec.pass},
                      {"counts",
                       {{"before", counts_to_json(rec.before)},
                        {"after", counts_to_json(rec.after)}}},
                      {"two_qubit_ratio", rec.two_qubit_ratio()},
                      {"sweeps", rec.sweeps},
                      {"wall_ms", rec.wall_ms},
                      {"block_size", rec.block_size},
                      {"epsilon", rec.epsilon},
                      {"multistarts", rec.multistarts},
                      {"blocks", std::move(blocks)}});
  }
  return {{"tool", "qinst"},
          {"command", info.command},
          {"seed", info.seed},
          {"input", info.input},
          {"output", info.output},
          {"passes", std::move(passes)}};
}

std::vector<passes::BlockRecord> blocks_from_pass_report(const json& doc) {
  if (!doc.is_object() || !doc.contains("passes") || !doc["passes"].is_array()) {
    throw PairingError("report has no \"passes\" array");
  }
  if (doc["passes"].size() != 1) {
    throw PairingError("report holds " + std::to_string(doc["passes"].size()) +
                       " passes; sections can only be matched for exactly one");
  }
  const json& pass = doc["passes"][0];
  if (!pass.contains("blocks") || !pass["blocks"].is_array()) {
    throw PairingError("report pass has no \"blocks\" array");
  }
  std::vector<passes::BlockRecord> out;
  for (const auto& b : pass["blocks"]) {
    if (!b.is_object()) throw PairingError("report block is not an object");
    passes::BlockRecord rec;
    rec.index = out.size();
    const auto location = array_of<long long>(b, "location");
    for (long long q : location) rec.location.push_back(static_cast<int>(q));
    rec.span = array_of<std::size_t>(b, "span");
    rec.compiled_ops = array_of<std::size_t>(b, "compiled_ops");
    out.push_back(std::move(rec));
  }
  return out;
}

json verification_to_json(const verify::VerificationReport& report,
                          double threshold, bool passed) {
  json sections = json::array();
  for (const auto& s : report.sections) {
    sections.push_back({{"id", s.id}, {"location", s.location}, {"distance", s.distance}});
  }
  return {{"tool", "qinst"},
          {"mode", verify::to_string(report.mode)},
          {"section_size", report.section_size},
          {"total_distance", report.total_distance},
          {"composed_bound", report.composed_bound},
          {"threshold", threshold},
          {"passed", passed},
          {"sections", std::move(sections)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qinst::io
