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

#ifndef RADOHORN_REPORT_HPP_
#define RADOHORN_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "radohorn/family.hpp"
#include "radohorn/young.hpp"

namespace radohorn {

// Exit taxonomy shared by the CLI and the bindings. Semantic negatives
// (violated, degenerate, infeasible, no witness applicable) are reports,
// not errors: the document is still emitted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitBudget = 3;

struct CommandResult {
  nlohmann::ordered_json document;
  int exit_code = kExitOk;
};

struct ReportOptions {
  std::string input;    // echoed verbatim into the report
  bool render = false;  // attach a diagram where the command has a partition
  bool trace = false;   // construct: include each stage's projected family
  YoungStyle style = YoungStyle::kUnicode;
};

CommandResult run_partition(const VectorFamily& family, const ReportOptions& options);
CommandResult run_analyze(const VectorFamily& family, int k, const ReportOptions& options);
CommandResult run_construct(const VectorFamily& family, const ReportOptions& options);
CommandResult run_witness(const VectorFamily& family, int k, const ReportOptions& options);
CommandResult run_remove(const VectorFamily& family, int k, int l, const ReportOptions& options);
CommandResult run_oracle(const VectorFamily& family, const ReportOptions& options);

// Two-space indent plus a trailing newline; reports are golden-file stable.
std::string serialize_report(const nlohmann::ordered_json& document);

}  // namespace radohorn

#endif  // RADOHORN_REPORT_HPP_
