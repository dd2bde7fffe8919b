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

#include "qinst/verify/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include <omp.h>

#include "qinst/error.hpp"
#include "qinst/numerics/distance.hpp"
#include "qinst/passes/partition.hpp"

namespace qinst::verify {
namespace {

double snapped_distance(const ir::Circuit& original, const ir::Circuit& compiled) {
  const ir::UnitaryMatrix u = ir::circuit_unitary(compiled);
  const ir::UnitaryMatrix v = ir::circuit_unitary(original);
  const double d = numerics::hs_distance(u, v);
  return d < resolution_floor(u.dim()) ? 0.0 : d;
}

std::string join(const std::vector<int>& qubits) {
  std::string s;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(qubits[i]);
  }
  return s;
}

// Concatenates block circuits onto the local qubits of `location`.
ir::Circuit merge(const std::vector<const ir::Circuit*>& parts,
                  const std::vector<const std::vector<int>*>& locations,
                  const std::vector<int>& location) {
  ir::Circuit out(static_cast<int>(location.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> map;
    for (int q : *locations[i]) {
      map.push_back(static_cast<int>(
          std::lower_bound(location.begin(), location.end(), q) - location.begin()));
    }
    out = out.concat(ir::remap(*parts[i], map, out.num_qubits()));
  }
  return out;
}

void check_cover(const std::vector<passes::BlockRecord>& blocks, std::size_t size,
                 bool compiled) {
  std::vector<int> seen(size, 0);
  for (const auto& b : blocks) {
    for (std::size_t idx : compiled ? b.compiled_ops : b.span) {
      if (idx >= size || seen[idx]++) {
        throw PairingError(std::string(compiled ? "compiled" : "original") +
                           " op " + std::to_string(idx) + " of block " +
                           std::to_string(b.index) +
                           " is out of range or claimed twice");
      }
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (!seen[i]) {
      throw PairingError(std::string(compiled ? "compiled" : "original") +
                         " op " + std::to_string(i) + " belongs to no block");
    }
  }
}

}  // namespace

double resolution_floor(int dim) {
  return std::max(1e-14, 4.0 * dim * DBL_EPSILON);
}

const char* to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "upper_bound";
}

VerificationReport verify_exact(const ir::Circuit& original,
                                const ir::Circuit& compiled) {
  if (original.num_qubits() != compiled.num_qubits()) {
    throw ShapeError("original has " + std::to_string(original.num_qubits()) +
                     " qubits, compiled has " +
                     std::to_string(compiled.num_qubits()));
  }
  VerificationReport report;
  report.mode = Mode::exact;
  report.section_size = original.num_qubits();
  report.total_distance = snapped_distance(original, compiled);
  report.composed_bound = report.total_distance;
  std::vector<int> all(original.num_qubits());
  for (int q = 0; q < original.num_qubits(); ++q) all[q] = q;
  report.sections.push_back({0, all, report.total_distance});
  return report;
}

VerificationReport verify_upper_bound(const std::vector<SectionPair>& sections,
                                      int section_size, int jobs) {
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& s = sections[i];
    if (s.original_location != s.compiled_location) {
      throw PairingError("section " + std::to_string(i) + " pairs qubits {" +
                         join(s.original_location) + "} with {" +
                         join(s.compiled_location) + "}");
    }
    if (s.original.num_qubits() != static_cast<int>(s.original_location.size()) ||
        s.compiled.num_qubits() != static_cast<int>(s.compiled_location.size())) {
      throw PairingError("section " + std::to_string(i) +
                         " has circuits that do not match its location");
    }
  }

  VerificationReport report;
  report.mode = Mode::upper_bound;
  report.section_size = section_size;
  report.sections.resize(sections.size());
  std::exception_ptr error;
  long error_index = static_cast<long>(sections.size());
  const long count = static_cast<long>(sections.size());
#pragma omp parallel for schedule(dynamic, 1) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (long i = 0; i < count; ++i) {
    try {
      report.sections[i] = {static_cast<std::size_t>(i), sections[i].original_location,
                            snapped_distance(sections[i].original, sections[i].compiled)};
    } catch (...) {
#pragma omp critical(qinst_verify_error)
      {
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  double root_sum = 0.0;
  for (const auto& s : report.sections) {
    report.total_distance += s.distance;
    root_sum += std::sqrt(s.distance);
  }
  report.composed_bound = std::min(1.0, root_sum * root_sum);
  return report;
}

std::vector<SectionPair> resection(const std::vector<passes::BlockRecord>& blocks,
                                   int num_qubits, int section_size) {
  std::vector<std::vector<int>> supports;
  supports.reserve(blocks.size());
  std::vector<std::size_t> nonempty;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].location.empty()) continue;
    supports.push_back(blocks[b].location);
    nonempty.push_back(b);
  }
  std::vector<SectionPair> out;
  for (const auto& group : passes::group_by_support(supports, num_qubits, section_size)) {
    std::vector<int> location;
    std::vector<const ir::Circuit*> originals, compileds;
    std::vector<const std::vector<int>*> locations;
    for (std::size_t item : group) {
      const auto& b = blocks[nonempty[item]];
      location.insert(location.end(), b.location.begin(), b.location.end());
      originals.push_back(&b.original);
      compileds.push_back(&b.compiled);
      locations.push_back(&b.location);
    }
    std::sort(location.begin(), location.end());
    location.erase(std::unique(location.begin(), location.end()), location.end());
    out.push_back({location, merge(originals, locations, location), location,
                   merge(compileds, locations, location)});
  }
  return out;
}

std::vector<passes::BlockRecord> rebuild_blocks(
    const ir::Circuit& original, const ir::Circuit& compiled,
    const std::vector<passes::BlockRecord>& blocks) {
  if (original.num_qubits() != compiled.num_qubits()) {
    throw PairingError("original has " + std::to_string(original.num_qubits()) +
                       " qubits, compiled has " +
                       std::to_string(compiled.num_qubits()));
  }
  check_cover(blocks, original.size(), false);
  check_cover(blocks, compiled.size(), true);
  std::vector<passes::BlockRecord> out = blocks;
  for (auto& b : out) {
    std::vector<int> sorted = b.location;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != b.location ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= original.num_qubits()))) {
      throw PairingError("block " + std::to_string(b.index) +
                         " has an invalid location {" + join(b.location) + "}");
    }
    try {
      b.original = passes::extract(original, b.span, b.location);
      b.compiled = passes::extract(compiled, b.compiled_ops, b.location);
    } catch (const PartitionError& e) {
      throw PairingError("block " + std::to_string(b.index) + ": " + e.what());
    }
  }
  return out;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  char buf[64];
  out << "mode " << to_string(report.mode) << "\n";
  out << "section_size " << report.section_size << "\n";
  out << "section\tqubits\tdistance\n";
  for (const auto& s : report.sections) {
    std::snprintf(buf, sizeof buf, "%.6e", s.distance);
    out << s.id << "\t" << join(s.location) << "\t" << buf << "\n";
  }
  std::snprintf(buf, sizeof buf, "%.6e", report.total_distance);
  out << "total " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.6e", report.composed_bound);
  out << "composed_bound " << buf << "\n";
  return out.str();
}

}  // namespace qinst::verify
