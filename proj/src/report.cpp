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

#include "radohorn/report.hpp"

#include <string>
#include <utility>
#include <vector>

#include "radohorn/certificates.hpp"
#include "radohorn/errors.hpp"
#include "radohorn/fundamental.hpp"
#include "radohorn/oracle.hpp"
#include "radohorn/partition.hpp"
#include "radohorn/rational.hpp"

namespace radohorn {

namespace {

using nlohmann::ordered_json;

ordered_json envelope(const char* command, const ReportOptions& options) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["input"] = options.input;
  return doc;
}

ordered_json id_array(const VectorFamily& family, const IndexSet& indices) {
  ordered_json out = ordered_json::array();
  for (int i : indices) out.push_back(family.label(i));
  return out;
}

ordered_json id_blocks(const VectorFamily& family, const std::vector<IndexSet>& blocks) {
  ordered_json out = ordered_json::array();
  for (const IndexSet& block : blocks) out.push_back(id_array(family, block));
  return out;
}

ordered_json profile_array(const PartitionProfile& profile) {
  return ordered_json(profile.sizes);
}

ordered_json coords_array(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& c : v.coords()) out.push_back(to_fraction_string(c));
  return out;
}

CommandResult degenerate_result(const char* command, const ReportOptions& options,
                                const VectorFamily& family, const DegenerateFamilyError& e) {
  ordered_json doc = envelope(command, options);
  doc["verdict"] = "degenerate";
  doc["zero_vectors"] = id_array(family, e.zero_indices());
  doc["note"] = e.what();
  return {std::move(doc), kExitNegative};
}

ordered_json transversal_json(const VectorFamily& family, const Transversal& transversal) {
  ordered_json out;
  out["t"] = transversal.t;
  out["slices"] = id_blocks(family, transversal.slices);
  out["rank"] = transversal.slice_rank();
  return out;
}

// Figure-3 style: every cell carries the tag of the stage that placed it,
// followed by one legend line per stage.
std::string construct_diagram(const FundamentalResult& result, YoungStyle style) {
  CellLabels labels;
  for (std::size_t row = 0; row < result.block_cells.size(); ++row) {
    int col = 1;
    for (const auto& [stage, count] : result.block_cells[row]) {
      for (int c = 0; c < count; ++c) {
        labels[{static_cast<int>(row) + 1, col++}] = "t" + std::to_string(stage);
      }
    }
  }
  std::string text = render_young(result.partition.profile(), labels, style);
  for (std::size_t j = 0; j < result.trace.stages.size(); ++j) {
    const Stage& stage = result.trace.stages[j];
    text += "t" + std::to_string(j + 1) + ": t=" + std::to_string(stage.t) +
            ", k=" + std::to_string(stage.k) + ", s=" + std::to_string(stage.s) + "\n";
  }
  return text;
}

}  // namespace

CommandResult run_partition(const VectorFamily& family, const ReportOptions& options) {
  ordered_json doc = envelope("partition", options);
  try {
    FundamentalResult result = construct_fundamental(family);
    doc["verdict"] = "ok";
    doc["blocks"] = id_blocks(family, result.partition.blocks);
    doc["profile"] = profile_array(result.partition.profile());
    if (options.render) doc["diagram"] = render_young(result.partition.profile(), {}, options.style);
    return {std::move(doc), kExitOk};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("partition", options, family, e);
  }
}

CommandResult run_analyze(const VectorFamily& family, int k, const ReportOptions& options) {
  ordered_json doc = envelope("analyze", options);
  doc["k"] = k;
  try {
    RadoHornCertificate cert = partition_into_k(family, k);
    if (cert.verdict == Verdict::kSatisfiable) {
      doc["verdict"] = "satisfiable";
      doc["blocks"] = id_blocks(family, cert.partition->blocks);
      doc["profile"] = profile_array(cert.partition->profile());
      if (options.render) doc["diagram"] = render_young(cert.partition->profile(), {}, options.style);
      return {std::move(doc), kExitOk};
    }
    doc["verdict"] = "violated";
    ordered_json witness;
    witness["ids"] = id_array(family, *cert.witness_subset);
    witness["ratio"] = to_fraction_string(*cert.ratio);
    witness["decomposition"] =
        std::to_string(k) + " + 1/" + std::to_string(cert.transversal->slice_rank());
    witness["transversal"] = transversal_json(family, *cert.transversal);
    witness["anchor"] = family.label(*cert.anchor);
    doc["witness"] = std::move(witness);
    return {std::move(doc), kExitNegative};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("analyze", options, family, e);
  }
}

CommandResult run_construct(const VectorFamily& family, const ReportOptions& options) {
  ordered_json doc = envelope("construct", options);
  try {
    FundamentalResult result = construct_fundamental(family);
    doc["verdict"] = "ok";
    doc["blocks"] = id_blocks(family, result.partition.blocks);
    doc["profile"] = profile_array(result.partition.profile());
    ordered_json stages = ordered_json::array();
    for (std::size_t j = 0; j < result.trace.stages.size(); ++j) {
      const Stage& stage = result.trace.stages[j];
      ordered_json entry;
      entry["stage"] = static_cast<int>(j) + 1;
      entry["transversal"] = id_array(family, stage.transversal);
      entry["t"] = stage.t;
      entry["k"] = stage.k;
      entry["s"] = stage.s;
      entry["slices"] = id_blocks(family, stage.slices);
      entry["merged"] = id_blocks(family, stage.merged);
      if (options.trace) {
        ordered_json projected = ordered_json::array();
        const VectorFamily& pf = stage.projected_family;
        for (int i = 1; i <= pf.size(); ++i) {
          ordered_json item;
          item["id"] = pf.label(i);
          item["coords"] = coords_array(pf.vector(i));
          projected.push_back(std::move(item));
        }
        entry["projected_family"] = std::move(projected);
      }
      stages.push_back(std::move(entry));
    }
    doc["stages"] = std::move(stages);
    doc["diagram"] = construct_diagram(result, options.style);
    return {std::move(doc), kExitOk};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("construct", options, family, e);
  }
}

CommandResult run_witness(const VectorFamily& family, int k, const ReportOptions& options) {
  ordered_json doc = envelope("witness", options);
  doc["k"] = k;
  try {
    FundamentalResult fundamental = construct_fundamental(family);
    if (fundamental.partition.block_count() <= k) {
      doc["verdict"] = "feasible";
      doc["note"] = "family partitions into " + std::to_string(k) +
                    " independent sets; no redundant witness exists";
      return {std::move(doc), kExitNegative};
    }
    RedundantWitness w = redundant_witness(family, k, true);
    doc["verdict"] = "witness";
    doc["blocks"] = id_blocks(family, w.blocks);
    ordered_json basis = ordered_json::array();
    for (const RationalVector& v : w.subspace_basis) basis.push_back(coords_array(v));
    doc["subspace_basis"] = std::move(basis);
    doc["subspace_dim"] = static_cast<int>(w.subspace_basis.size());
    doc["slices"] = id_blocks(family, w.slices);
    doc["saturated"] = id_array(family, w.saturated);
    doc["ratio"] = to_fraction_string(w.ratio);
    ordered_json conditions;
    conditions["slices_span_subspace"] = w.slices_span_subspace;
    conditions["ratio_exceeds_k"] = w.ratio_exceeds_k;
    conditions["residuals_independent"] = w.residuals_independent;
    doc["conditions"] = std::move(conditions);
    return {std::move(doc), kExitOk};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("witness", options, family, e);
  }
}

CommandResult run_remove(const VectorFamily& family, int k, int l, const ReportOptions& options) {
  ordered_json doc = envelope("remove", options);
  doc["k"] = k;
  doc["l"] = l;
  try {
    RemovalReport report = generalized_check(family, k, l);
    if (report.feasible) {
      doc["verdict"] = "feasible";
      doc["removed"] = id_array(family, *report.removed);
      return {std::move(doc), kExitOk};
    }
    doc["verdict"] = "infeasible";
    ordered_json witness;
    witness["ids"] = id_array(family, *report.witness);
    witness["ratio"] = to_fraction_string(*report.ratio);
    doc["witness"] = std::move(witness);
    return {std::move(doc), kExitNegative};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("remove", options, family, e);
  }
}

CommandResult run_oracle(const VectorFamily& family, const ReportOptions& options) {
  ordered_json doc = envelope("oracle", options);
  try {
    const std::vector<OrderedPartition> partitions = enumerate_independent_partitions(family);
    const OrderedPartition fundamental = oracle_fundamental(family);
    const MaxRatioResult max_ratio = oracle_max_ratio(family);
    const int min_parts = oracle_min_parts(family);
    doc["verdict"] = "ok";
    doc["partition_count"] = static_cast<int>(partitions.size());
    doc["fundamental_blocks"] = id_blocks(family, fundamental.blocks);
    doc["fundamental_profile"] = profile_array(fundamental.profile());
    doc["max_ratio_ids"] = id_array(family, max_ratio.subset);
    doc["max_ratio"] = to_fraction_string(max_ratio.ratio);
    doc["min_parts"] = min_parts;
    return {std::move(doc), kExitOk};
  } catch (const BudgetError& e) {
    doc["verdict"] = "budget_exceeded";
    doc["note"] = e.what();
    return {std::move(doc), kExitBudget};
  } catch (const DegenerateFamilyError& e) {
    return degenerate_result("oracle", options, family, e);
  }
}

std::string serialize_report(const nlohmann::ordered_json& document) {
  return document.dump(2) + "\n";
}

}  // namespace radohorn
