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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// FAIL. Ground truth throughout is the brute-force oracle plus direct rank
// recomputation; every comparison is exact.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "radohorn/certificates.hpp"
#include "radohorn/errors.hpp"
#include "radohorn/family_io.hpp"
#include "radohorn/fundamental.hpp"
#include "radohorn/linalg.hpp"
#include "radohorn/oracle.hpp"
#include "radohorn/partition.hpp"
#include "radohorn/rational.hpp"

using namespace radohorn;

namespace {

constexpr unsigned kSeed = 20260814;
constexpr int kSweepSize = 200;

int g_failures = 0;
std::vector<std::string> g_details;

void detail(const std::string& line) {
  if (g_details.size() < 8) g_details.push_back(line);
}

void criterion(int number, const std::string& name, bool ok) {
  if (!ok) {
    ++g_failures;
    for (const std::string& line : g_details) std::printf("       %s\n", line.c_str());
  }
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, name.c_str());
  std::fflush(stdout);
  g_details.clear();
}

VectorFamily random_family(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim_dist(1, 4);
  std::uniform_int_distribution<int> size_dist(1, 10);
  std::uniform_int_distribution<int> coord_dist(-2, 2);
  const int dimension = dim_dist(rng);
  const int m = size_dist(rng);
  std::vector<FamilyEntry> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> coords;
    bool zero = true;
    while (zero) {
      coords.clear();
      for (int d = 0; d < dimension; ++d) {
        const int c = coord_dist(rng);
        if (c != 0) zero = false;
        coords.emplace_back(c);
      }
    }
    entries.push_back({"phi" + std::to_string(i), RationalVector(std::move(coords))});
  }
  return VectorFamily(dimension, std::move(entries));
}

VectorFamily subfamily(const VectorFamily& f, const IndexSet& removed) {
  std::vector<FamilyEntry> entries;
  for (int i = 1; i <= f.size(); ++i) {
    if (removed.count(i) == 0) entries.push_back({f.label(i), f.vector(i)});
  }
  return VectorFamily(f.dimension(), std::move(entries));
}

struct ViolatedInstance {
  std::size_t family;
  int k;
  RadoHornCertificate certificate;
};

// --- criterion 1 ----------------------------------------------------------

bool equivalence_sweep(const std::vector<VectorFamily>& sweep,
                       std::vector<ViolatedInstance>* violated) {
  bool ok = true;
  for (std::size_t fi = 0; fi < sweep.size(); ++fi) {
    const VectorFamily& f = sweep[fi];
    const int min_parts = oracle_min_parts(f);
    for (int k = 1; k <= f.size(); ++k) {
      RadoHornCertificate constructive = partition_into_k(f, k);
      RadoHornCertificate inequality = check_inequality(f, k);
      const bool sat1 = constructive.verdict == Verdict::kSatisfiable;
      const bool sat2 = inequality.verdict == Verdict::kSatisfiable;
      const bool sat3 = min_parts <= k;
      if (sat1 != sat2 || sat2 != sat3) {
        detail("family " + std::to_string(fi) + " k=" + std::to_string(k) +
               ": partition=" + std::to_string(sat1) + " inequality=" + std::to_string(sat2) +
               " oracle=" + std::to_string(sat3));
        ok = false;
      }
      if (!sat1) violated->push_back({fi, k, std::move(constructive)});
      if (sat1) {
        // The shipped partition must actually use at most k independent blocks.
        const OrderedPartition& p = *constructive.partition;
        if (p.block_count() > k || !validate_ordered(f, p).valid()) {
          detail("family " + std::to_string(fi) + " k=" + std::to_string(k) +
                 ": shipped partition invalid");
          ok = false;
        }
      }
    }
  }
  return ok;
}

// --- criterion 2 ----------------------------------------------------------

bool profile_agreement(const std::vector<VectorFamily>& sweep,
                       const std::vector<VectorFamily>& fixtures) {
  bool ok = true;
  auto check = [&ok](const VectorFamily& f, const std::string& tag) {
    if (f.size() > 9) return;
    const PartitionProfile constructed = construct_fundamental(f).partition.profile();
    const PartitionProfile oracle = oracle_fundamental(f).profile();
    if (!(constructed == oracle)) {
      detail(tag + ": constructed profile differs from oracle");
      ok = false;
    }
  };
  for (std::size_t i = 0; i < sweep.size(); ++i) check(sweep[i], "family " + std::to_string(i));
  for (std::size_t i = 0; i < fixtures.size(); ++i) check(fixtures[i], "fixture " + std::to_string(i));
  return ok;
}

// --- criterion 3 ----------------------------------------------------------

bool majorization_sweep(const std::vector<VectorFamily>& sweep) {
  bool ok = true;
  for (std::size_t fi = 0; fi < sweep.size(); ++fi) {
    const VectorFamily& f = sweep[fi];
    if (f.size() > 8) continue;
    const PartitionProfile fundamental = construct_fundamental(f).partition.profile();
    for (const OrderedPartition& p : enumerate_independent_partitions(f)) {
      if (!majorizes(fundamental, p.profile())) {
        detail("family " + std::to_string(fi) + ": profile fails to majorize an enumerated one");
        ok = false;
        break;
      }
    }
  }
  return ok;
}

// --- criterion 4 ----------------------------------------------------------

bool violation_certificates(const std::vector<VectorFamily>& sweep,
                            const std::vector<ViolatedInstance>& violated) {
  bool ok = true;
  for (const ViolatedInstance& v : violated) {
    const VectorFamily& f = sweep[v.family];
    const RadoHornCertificate& cert = v.certificate;
    if (!cert.ratio || !cert.witness_subset || !cert.transversal || !cert.anchor) {
      detail("family " + std::to_string(v.family) + " k=" + std::to_string(v.k) +
             ": incomplete certificate");
      ok = false;
      continue;
    }
    const int d = cert.transversal->slice_rank();
    const int embedded = rank(f.vectors(cert.transversal->support()));
    const Rational expected(v.k * d + 1, d);
    const Rational recomputed(static_cast<int>(cert.witness_subset->size()),
                              rank(f.vectors(*cert.witness_subset)));
    if (d <= 0 || embedded != d || *cert.ratio != expected || recomputed != expected) {
      detail("family " + std::to_string(v.family) + " k=" + std::to_string(v.k) +
             ": ratio decomposition mismatch");
      ok = false;
    }
  }
  return ok;
}

// --- criterion 5 ----------------------------------------------------------

bool transversal_checks(const VectorFamily& f, const OrderedPartition& partition,
                        const Transversal& t, const std::vector<int>& anchors,
                        const std::string& tag) {
  bool ok = true;
  if (static_cast<int>(t.slices.size()) != t.t) {
    detail(tag + ": slice count differs from t");
    ok = false;
  }
  for (std::size_t i = 0; i < t.slices.size(); ++i) {
    const IndexSet& slice = t.slices[i];
    if (slice.empty()) {
      detail(tag + ": empty slice");
      ok = false;
    }
    const IndexSet& block = partition.blocks[i];
    for (int idx : slice) {
      if (block.count(idx) == 0) {
        detail(tag + ": slice escapes its block");
        ok = false;
      }
    }
    if (!span_equal(f.vectors(slice), f.vectors(t.slices[0]))) {
      detail(tag + ": slices are not span-equal");
      ok = false;
    }
    for (int anchor : anchors) {
      if (!in_span(f.vector(anchor), f.vectors(slice))) {
        detail(tag + ": anchor outside a slice span");
        ok = false;
      }
    }
  }
  return ok;
}

bool transversal_sweep(const std::vector<VectorFamily>& sweep) {
  bool ok = true;
  for (std::size_t fi = 0; fi < sweep.size(); ++fi) {
    const VectorFamily& f = sweep[fi];
    if (f.size() > 8) continue;
    const OrderedPartition partition = construct_fundamental(f).partition;
    const int l = partition.block_count();
    for (int t = 1; t < l; ++t) {
      std::vector<Transversal> found;
      std::vector<int> anchors;
      for (int b = t + 1; b <= l; ++b) {
        for (int anchor : partition.blocks[static_cast<std::size_t>(b) - 1]) {
          const std::string tag =
              "family " + std::to_string(fi) + " t=" + std::to_string(t) +
              " anchor=" + std::to_string(anchor);
          Transversal tr = find_transversal(f, partition, t, anchor);
          ok = transversal_checks(f, partition, tr, {anchor}, tag) && ok;
          found.push_back(std::move(tr));
          anchors.push_back(anchor);
        }
      }
      for (std::size_t i = 1; i < found.size(); ++i) {
        const std::string tag =
            "family " + std::to_string(fi) + " t=" + std::to_string(t) + " merged pair " +
            std::to_string(i);
        Transversal merged = merge_transversals(found[i - 1], found[i]);
        ok = transversal_checks(f, partition, merged,
                                {anchors[i - 1], anchors[i]}, tag) &&
             ok;
      }
    }
  }
  return ok;
}

// --- criterion 6 ----------------------------------------------------------

bool removal_matches_exhaustive(const VectorFamily& f, int k, int l, const std::string& tag) {
  const RemovalReport report = generalized_check(f, k, l);

  bool truth = false;
  std::vector<int> combo(static_cast<std::size_t>(l));
  auto search = [&](auto&& self, int next, int depth) -> bool {
    if (depth == l) {
      IndexSet removed(combo.begin(), combo.end());
      return oracle_min_parts(subfamily(f, removed)) <= k;
    }
    for (int i = next; i <= f.size(); ++i) {
      combo[static_cast<std::size_t>(depth)] = i;
      if (self(self, i + 1, depth + 1)) return true;
    }
    return false;
  };
  truth = search(search, 1, 0);

  if (report.feasible != truth) {
    detail(tag + ": verdict " + std::to_string(report.feasible) + " vs exhaustive " +
           std::to_string(truth));
    return false;
  }
  if (report.feasible) {
    if (!report.removed || static_cast<int>(report.removed->size()) != l ||
        oracle_min_parts(subfamily(f, *report.removed)) > k) {
      detail(tag + ": removed set is not a working removal");
      return false;
    }
  } else {
    if (!report.witness || !report.ratio) {
      detail(tag + ": missing witness");
      return false;
    }
    const Rational recomputed(static_cast<int>(report.witness->size()) - l,
                              rank(f.vectors(*report.witness)));
    if (recomputed != *report.ratio || !(*report.ratio > Rational(k))) {
      detail(tag + ": witness ratio (" + to_fraction_string(recomputed) +
             ") fails the strict bound");
      return false;
    }
  }
  return true;
}

bool generalized_sweep(const std::vector<VectorFamily>& sweep,
                       const std::vector<VectorFamily>& fixtures) {
  bool ok = true;
  std::vector<const VectorFamily*> pool;
  for (const VectorFamily& f : fixtures) pool.push_back(&f);
  int taken = 0;
  for (const VectorFamily& f : sweep) {
    if (f.size() <= 8 && taken < 60) {
      pool.push_back(&f);
      ++taken;
    }
  }
  for (std::size_t pi = 0; pi < pool.size(); ++pi) {
    const VectorFamily& f = *pool[pi];
    if (f.size() > 8) continue;
    for (int k = 1; k <= 3; ++k) {
      for (int l = 0; l <= 3 && l <= f.size(); ++l) {
        const std::string tag = "instance " + std::to_string(pi) + " k=" + std::to_string(k) +
                                " l=" + std::to_string(l);
        ok = removal_matches_exhaustive(f, k, l, tag) && ok;
      }
    }
  }
  return ok;
}

// --- criterion 7 ----------------------------------------------------------

bool redundant_witness_sweep(const std::vector<VectorFamily>& sweep,
                             const std::vector<ViolatedInstance>& violated) {
  bool ok = true;
  for (const ViolatedInstance& v : violated) {
    const VectorFamily& f = sweep[v.family];
    const std::string tag = "family " + std::to_string(v.family) + " k=" + std::to_string(v.k);
    const RedundantWitness w = redundant_witness(f, v.k, true);
    if (static_cast<int>(w.blocks.size()) != v.k || w.blocks.size() != w.slices.size()) {
      detail(tag + ": block/slice shape mismatch");
      ok = false;
      continue;
    }
    // (i) every slice spans S, recomputed from scratch.
    const int dim_s = rank(w.subspace_basis);
    if (dim_s != static_cast<int>(w.subspace_basis.size())) {
      detail(tag + ": reported basis is dependent");
      ok = false;
    }
    bool cond1 = true;
    for (const IndexSet& slice : w.slices) {
      if (!span_equal(f.vectors(slice), w.subspace_basis)) cond1 = false;
    }
    // (ii) |J| / dim S > k with J the saturated set.
    IndexSet saturated;
    for (int i = 1; i <= f.size(); ++i) {
      if (in_span(f.vector(i), w.subspace_basis)) saturated.insert(i);
    }
    const bool cond2 =
        saturated == w.saturated &&
        Rational(static_cast<int>(saturated.size()), dim_s) == w.ratio && w.ratio > v.k;
    // (iii) every block minus its slice is independent.
    bool cond3 = true;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
      if (!is_independent(f.vectors(set_difference(w.blocks[i], w.slices[i])))) cond3 = false;
    }
    if (!cond1 || !cond2 || !cond3 ||
        !w.slices_span_subspace || !w.ratio_exceeds_k || !w.residuals_independent) {
      detail(tag + ": conditions " + std::to_string(cond1) + std::to_string(cond2) +
             std::to_string(cond3));
      ok = false;
    }
  }
  return ok;
}

// --- criterion 8 ----------------------------------------------------------

bool projection_invariance(const std::vector<VectorFamily>& sweep,
                           const std::vector<VectorFamily>& fixtures) {
  bool ok = true;
  auto check = [&ok](const VectorFamily& f, const std::string& tag) {
    const FundamentalResult result = construct_fundamental(f);
    const std::vector<Stage>& stages = result.trace.stages;
    for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
      const Stage& next = stages[j + 1];
      IndexSet remaining(next.snapshot_indices.begin(), next.snapshot_indices.end());
      std::vector<int> residual_sizes;
      for (const IndexSet& block : result.partition.blocks) {
        int count = 0;
        for (int idx : block) {
          if (remaining.count(idx)) ++count;
        }
        if (count > 0) residual_sizes.push_back(count);
      }
      std::sort(residual_sizes.begin(), residual_sizes.end(), std::greater<int>());
      const PartitionProfile projected = oracle_fundamental(next.projected_family).profile();
      if (projected.sizes != residual_sizes) {
        detail(tag + " stage " + std::to_string(j + 2) + ": residual profile mismatch");
        ok = false;
      }
    }
  };
  for (std::size_t i = 0; i < fixtures.size(); ++i) check(fixtures[i], "fixture " + std::to_string(i));
  int taken = 0;
  for (std::size_t i = 0; i < sweep.size() && taken < 50; ++i, ++taken) {
    check(sweep[i], "family " + std::to_string(i));
  }
  return ok;
}

// --- criterion 9 ----------------------------------------------------------

bool exchange_sweep(std::mt19937& rng) {
  bool ok = true;
  int legal = 0;
  int rejected = 0;
  int rounds = 0;
  while (legal < 1000 && rounds < 20000) {
    ++rounds;
    const VectorFamily f = random_family(rng);
    const OrderedPartition partition = construct_fundamental(f).partition;
    for (const IndexSet& block : partition.blocks) {
      for (int incoming = 1; incoming <= f.size(); ++incoming) {
        if (block.count(incoming) || !in_span(f.vector(incoming), f.vectors(block))) continue;
        const std::vector<Rational> coeff =
            expansion_coefficients(f.vector(incoming), f.vectors(block));
        const std::vector<int> order = to_sorted_vector(block);
        for (std::size_t p = 0; p < order.size(); ++p) {
          const int pivot = order[p];
          if (coeff[p] == 0) {
            try {
              exchange(f, block, incoming, pivot);
              detail("zero pivot accepted");
              ok = false;
            } catch (const ZeroPivotError&) {
              ++rejected;
            }
            continue;
          }
          const IndexSet swapped = exchange(f, block, incoming, pivot);
          if (swapped.size() != block.size() ||
              !span_equal(f.vectors(swapped), f.vectors(block)) ||
              !is_independent(f.vectors(swapped))) {
            detail("legal exchange broke span or cardinality");
            ok = false;
          }
          ++legal;
        }
      }
    }
  }
  if (legal < 1000) {
    detail("only " + std::to_string(legal) + " legal exchanges performed");
    ok = false;
  }
  if (rejected == 0) {
    detail("no zero-pivot rejection was ever exercised");
    ok = false;
  }
  return ok;
}

// --- criterion 10 ---------------------------------------------------------

int brute_force_max_spanning(const VectorFamily& f) {
  const int m = f.size();
  const int full = rank(f.vectors(f.all_indices()));
  std::vector<char> spans(static_cast<std::size_t>(1) << m, 0);
  for (unsigned mask = 1; mask < spans.size(); ++mask) {
    std::vector<RationalVector> vs;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) vs.push_back(f.vector(i + 1));
    }
    spans[mask] = rank(vs) == full ? 1 : 0;
  }
  // All set partitions (blocks as bitmasks), counting spanning blocks.
  int best = 0;
  std::vector<unsigned> blocks;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i > m) {
      int count = 0;
      for (unsigned b : blocks) count += spans[b];
      if (count > best) best = count;
      return;
    }
    const unsigned bit = 1u << (i - 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      self(self, i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, i + 1);
    blocks.pop_back();
  };
  recurse(recurse, 1);
  return best;
}

bool spanning_remark(const std::vector<VectorFamily>& sweep,
                     const std::vector<VectorFamily>& fixtures) {
  bool ok = true;
  auto check = [&ok](const VectorFamily& f, const std::string& tag) {
    const SpanningSummary summary = spanning_summary(f);
    if (summary.total_dim != rank(f.vectors(f.all_indices()))) {
      detail(tag + ": total_dim differs from rank");
      ok = false;
    }
    if (f.size() <= 8 && summary.max_spanning_sets != brute_force_max_spanning(f)) {
      detail(tag + ": max_spanning_sets " + std::to_string(summary.max_spanning_sets) +
             " vs brute force " + std::to_string(brute_force_max_spanning(f)));
      ok = false;
    }
  };
  for (std::size_t i = 0; i < sweep.size(); ++i) check(sweep[i], "family " + std::to_string(i));
  for (std::size_t i = 0; i < fixtures.size(); ++i) check(fixtures[i], "fixture " + std::to_string(i));
  return ok;
}

// --- criterion 11 ---------------------------------------------------------

std::string read_file(const std::string& path, bool* found) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *found = false;
    return "";
  }
  *found = true;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool golden_runner(const std::string& cli, const std::string& workdir,
                   const std::string& golden_dir) {
  bool manifest_found = false;
  const std::string manifest_text = read_file(golden_dir + "/manifest.json", &manifest_found);
  if (!manifest_found) {
    detail("missing manifest: " + golden_dir + "/manifest.json");
    return false;
  }
  nlohmann::json manifest = nlohmann::json::parse(manifest_text);
  bool ok = true;
  int index = 0;
  for (const nlohmann::json& entry : manifest) {
    const std::string name = entry["name"];
    const int expected_exit = entry["exit"];
    // The CLI runs from the tests root so golden input paths stay relative
    // and byte-stable; the capture lands in the runner's own cwd.
    const std::string out_path =
        std::filesystem::absolute("acceptance_cli_" + std::to_string(index++) + ".out").string();
    std::string command = "cd \"" + workdir + "\" && \"" + cli + "\"";
    for (const nlohmann::json& arg : entry["args"]) {
      command += " " + arg.get<std::string>();
    }
    command += " > \"" + out_path + "\" 2> /dev/null";
    const int rc = std::system(command.c_str());
    const int exit_code = WEXITSTATUS(rc);
    bool golden_found = false;
    const std::string expected = read_file(golden_dir + "/" + entry["stdout"].get<std::string>(),
                                           &golden_found);
    bool actual_found = false;
    const std::string actual = read_file(out_path, &actual_found);
    std::remove(out_path.c_str());
    if (!golden_found) {
      detail(name + ": golden file missing");
      ok = false;
      continue;
    }
    if (exit_code != expected_exit) {
      detail(name + ": exit " + std::to_string(exit_code) + " expected " +
             std::to_string(expected_exit));
      ok = false;
    }
    if (!actual_found || actual != expected) {
      detail(name + ": stdout differs from golden");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string data_dir;
  std::string golden_dir;
  std::string workdir;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const std::string value = argv[i + 1];
    if (flag == "--cli") cli = value;
    if (flag == "--data") data_dir = value;
    if (flag == "--golden") golden_dir = value;
    if (flag == "--workdir") workdir = value;
  }
  if (cli.empty() || data_dir.empty() || golden_dir.empty() || workdir.empty()) {
    std::fprintf(stderr, "usage: acceptance --cli PATH --data DIR --golden DIR --workdir DIR\n");
    return 2;
  }

  std::mt19937 rng(kSeed);
  std::vector<VectorFamily> sweep;
  sweep.reserve(kSweepSize);
  for (int i = 0; i < kSweepSize; ++i) sweep.push_back(random_family(rng));

  const std::vector<VectorFamily> fixtures = {
      read_family_file(data_dir + "/fam_a.json"),
      read_family_file(data_dir + "/fam_b.json"),
      read_family_file(data_dir + "/fam_c.json"),
      read_family_file(data_dir + "/fam_d.json"),
  };
  const std::vector<VectorFamily> projection_fixtures = {fixtures[0], fixtures[2], fixtures[3]};

  std::vector<ViolatedInstance> violated;
  criterion(1, "partition_into_k, check_inequality and oracle_min_parts agree",
            equivalence_sweep(sweep, &violated));
  criterion(2, "constructed fundamental profile equals the oracle profile",
            profile_agreement(sweep, fixtures));
  criterion(3, "fundamental profile majorizes every enumerated profile",
            majorization_sweep(sweep));
  criterion(4, "violation certificates decompose as k + 1/dim span(T)",
            violation_certificates(sweep, violated));
  criterion(5, "transversals pass definition checks for all (t, anchor)",
            transversal_sweep(sweep));
  criterion(6, "generalized removal check matches exhaustive search",
            generalized_sweep(sweep, fixtures));
  criterion(7, "redundant witnesses satisfy conditions (i)-(iii)",
            redundant_witness_sweep(sweep, violated));
  criterion(8, "projected families keep the residual fundamental profile",
            projection_invariance(sweep, projection_fixtures));
  criterion(9, "exchanges preserve cardinality and span; zero pivots rejected",
            exchange_sweep(rng));
  criterion(10, "spanning summary matches rank and brute-force packing",
            spanning_remark(sweep, fixtures));
  criterion(11, "CLI reports are byte-identical to the golden files",
            golden_runner(cli, workdir, golden_dir));

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
