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

#include <vector>

#include "qinst/ir/circuit.hpp"

namespace qinst::ir {

std::vector<Region> group_interactions(const Circuit& circuit) {
  const auto& ops = circuit.ops();
  std::vector<bool> assigned(ops.size(), false);
  std::vector<Region> regions;

  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (assigned[i] || ops[i].location.size() != 2) continue;
    const int a = ops[i].location[0];
    const int b = ops[i].location[1];
    Region region{{a, b}, {i}};
    std::size_t last_two_qubit = 0;  // position in region.ops

    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const Location& loc = ops[j].location;
      int inside = 0;
      for (int q : loc) inside += (q == a || q == b) ? 1 : 0;
      if (inside == 0) continue;
      if (inside != loc.size()) break;  // touches {a,b} and an outside qubit
      region.ops.push_back(j);
      if (loc.size() == 2) last_two_qubit = region.ops.size() - 1;
    }
    region.ops.resize(last_two_qubit + 1);
    for (std::size_t k : region.ops) assigned[k] = true;
    regions.push_back(std::move(region));
  }
  return regions;
}

}  // namespace qinst::ir
