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
#include <string>
#include <vector>

#include <json.hpp>

#include "qinst/passes/pipeline.hpp"
#include "qinst/verify/verify.hpp"

namespace qinst::io {

struct RunInfo {
  std::string command;
  std::uint64_t seed = 0;
  std::string input;
  std::string output;
};

/// Pass report document; see docs/report-schema.json.
nlohmann::json pass_report_to_json(const passes::PassReport& report,
                                   const RunInfo& info);

/**
 * Reads the block layout (index, location, span, compiled_ops) of the single
 * pass in a pass report document. The circuits of the records are left
 * empty; see verify::rebuild_blocks(). Throws PairingError when the document
 * does not hold exactly one pass with well-formed blocks.
 */
std::vector<passes::BlockRecord> blocks_from_pass_report(const nlohmann::json& doc);

/// Verification document; see docs/verification-schema.json.
nlohmann::json verification_to_json(const verify::VerificationReport& report,
                                    double threshold, bool passed);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace qinst::io
