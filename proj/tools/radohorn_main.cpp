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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "radohorn/errors.hpp"
#include "radohorn/family_io.hpp"
#include "radohorn/report.hpp"

namespace {

struct CliArgs {
  std::string input;
  std::string output;
  bool render = false;
  bool ascii_only = false;
  bool trace = false;
  int k = 0;
  int l = 0;
};

void add_shared_flags(CLI::App* sub, CliArgs* args) {
  sub->add_option("--input", args->input, "Family file (.json or .csv)")->required();
  sub->add_option("--output", args->output, "Write the report here instead of stdout");
  sub->add_flag("--render", args->render, "Attach an ASCII Young diagram where applicable");
  sub->add_flag("--ascii-only", args->ascii_only, "Draw diagrams with '+', '-', '|' only");
}

int emit(const radohorn::CommandResult& result, const std::string& output_path) {
  const std::string text = radohorn::serialize_report(result.document);
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write output file: " << output_path << "\n";
      return radohorn::kExitInput;
    }
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition analysis for finite rational vector families"};
  app.require_subcommand(1);
  CliArgs args;

  CLI::App* partition = app.add_subcommand("partition", "Emit the fundamental partition");
  add_shared_flags(partition, &args);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Decide partitionability into k independent sets");
  add_shared_flags(analyze, &args);
  analyze->add_option("--k", args.k, "Number of independent sets")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* construct = app.add_subcommand("construct", "Stage-by-stage construction record");
  add_shared_flags(construct, &args);
  construct->add_flag("--trace", args.trace, "Include each stage's projected family");

  CLI::App* witness = app.add_subcommand("witness", "Redundant witness for an infeasible k");
  add_shared_flags(witness, &args);
  witness->add_option("--k", args.k, "Number of independent sets")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* remove = app.add_subcommand("remove", "Removal feasibility for k parts after l deletions");
  add_shared_flags(remove, &args);
  remove->add_option("--k", args.k, "Number of independent sets")
      ->required()
      ->check(CLI::PositiveNumber);
  remove->add_option("--l", args.l, "Number of vectors to remove")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force ground truth for test pinning");
  add_shared_flags(oracle, &args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : radohorn::kExitInput;
  }

  try {
    const radohorn::VectorFamily family = radohorn::read_family_file(args.input);
    radohorn::ReportOptions options;
    options.input = args.input;
    options.render = args.render;
    options.trace = args.trace;
    options.style =
        args.ascii_only ? radohorn::YoungStyle::kAscii : radohorn::YoungStyle::kUnicode;

    radohorn::CommandResult result;
    if (partition->parsed()) {
      result = radohorn::run_partition(family, options);
    } else if (analyze->parsed()) {
      result = radohorn::run_analyze(family, args.k, options);
    } else if (construct->parsed()) {
      result = radohorn::run_construct(family, options);
    } else if (witness->parsed()) {
      result = radohorn::run_witness(family, args.k, options);
    } else if (remove->parsed()) {
      result = radohorn::run_remove(family, args.k, args.l, options);
    } else if (oracle->parsed()) {
      result = radohorn::run_oracle(family, options);
    } else {
      std::cerr << "error: no command selected\n";
      return radohorn::kExitInput;
    }
    return emit(result, args.output);
  } catch (const radohorn::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return radohorn::kExitBudget;
  } catch (const radohorn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return radohorn::kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return radohorn::kExitInput;
  }
}
