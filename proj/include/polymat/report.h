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

// Outcome of an axiom checker: one entry per axiom, each with a textual
// witness when the axiom fails.

#ifndef POLYMAT_REPORT_H_
#define POLYMAT_REPORT_H_

#include <string>
#include <vector>

namespace polymat {

struct AxiomOutcome {
  enum class Status { kHolds, kFails, kSkipped };

  std::string axiom;  // e.g. "(C4)", "(PZ3)", "(B')"
  Status status = Status::kHolds;
  std::string witness;  // empty unless kFails (or the reason for kSkipped)

  bool holds() const { return status == Status::kHolds; }
  bool fails() const { return status == Status::kFails; }
};

struct CheckReport {
  std::vector<AxiomOutcome> outcomes;

  // True iff every axiom was evaluated and holds.
  bool holds() const;
  // Names of the axioms that failed, in checking order.
  std::vector<std::string> failed() const;
  // nullptr when the axiom is not part of this report.
  const AxiomOutcome* find(const std::string& axiom) const;

  // One line per axiom: "(C1) holds", "(C4) fails: <witness>",
  // "(Z3) skipped: <reason>".
  std::string to_string() const;
};

}  // namespace polymat

#endif  // POLYMAT_REPORT_H_
