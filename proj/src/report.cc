// Copyright 2026 The Authors.
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

#include "polymat/report.h"

#include <algorithm>

namespace polymat {

bool CheckReport::holds() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const AxiomOutcome& o) { return o.holds(); });
}

std::vector<std::string> CheckReport::failed() const {
  std::vector<std::string> names;
  for (const auto& o : outcomes) {
    if (o.fails()) names.push_back(o.axiom);
  }
  return names;
}

const AxiomOutcome* CheckReport::find(const std::string& axiom) const {
  for (const auto& o : outcomes) {
    if (o.axiom == axiom) return &o;
  }
  return nullptr;
}

std::string CheckReport::to_string() const {
  std::string out;
  for (const auto& o : outcomes) {
    out += o.axiom;
    switch (o.status) {
      case AxiomOutcome::Status::kHolds:
        out += " holds";
        break;
      case AxiomOutcome::Status::kFails:
        out += " fails";
        if (!o.witness.empty()) out += ": " + o.witness;
        break;
      case AxiomOutcome::Status::kSkipped:
        out += " skipped";
        if (!o.witness.empty()) out += ": " + o.witness;
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace polymat
