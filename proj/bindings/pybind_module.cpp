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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "radohorn/errors.hpp"
#include "radohorn/family.hpp"
#include "radohorn/family_io.hpp"
#include "radohorn/linalg.hpp"
#include "radohorn/rational.hpp"
#include "radohorn/report.hpp"

namespace py = pybind11;

namespace {

using radohorn::ReportOptions;
using radohorn::VectorFamily;

// Coordinates arrive as exact decimal or "p/q" strings; the python wrapper
// stringifies ints and rejects floats before they get here.
VectorFamily make_family(int dimension,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
  std::vector<radohorn::FamilyEntry> entries;
  entries.reserve(rows.size());
  for (const auto& [label, coords] : rows) {
    std::vector<radohorn::Rational> parsed;
    parsed.reserve(coords.size());
    for (const std::string& c : coords) parsed.push_back(radohorn::parse_rational(c));
    entries.push_back({label, radohorn::RationalVector(std::move(parsed))});
  }
  return VectorFamily(dimension, std::move(entries));
}

ReportOptions make_options(bool render, bool trace, bool ascii_only) {
  ReportOptions options;
  options.input = "<memory>";
  options.render = render;
  options.trace = trace;
  options.style = ascii_only ? radohorn::YoungStyle::kAscii : radohorn::YoungStyle::kUnicode;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact partition analysis for finite rational vector families";

  // Subclass translators must register after the base so they match first.
  auto base = py::register_exception<radohorn::Error>(m, "RadoHornError");
  py::register_exception<radohorn::ParseError>(m, "ParseError", base);
  py::register_exception<radohorn::BudgetError>(m, "BudgetError", base);

  py::class_<VectorFamily>(m, "Family")
      .def(py::init(&make_family), py::arg("dimension"), py::arg("vectors"),
           "vectors: list of (id, coords) pairs, coords as exact strings")
      .def_static(
          "from_json", [](const std::string& text) { return radohorn::parse_family_json(text); },
          py::arg("text"))
      .def_property_readonly("dimension", &VectorFamily::dimension)
      .def("__len__", &VectorFamily::size)
      .def("labels",
           [](const VectorFamily& f) {
             std::vector<std::string> out;
             out.reserve(static_cast<std::size_t>(f.size()));
             for (int i = 1; i <= f.size(); ++i) out.push_back(f.label(i));
             return out;
           })
      .def("to_json",
           [](const VectorFamily& f) { return radohorn::family_to_json(f).dump(2) + "\n"; });

  m.def(
      "rank",
      [](const VectorFamily& f) { return radohorn::rank(f.vectors(f.all_indices())); },
      py::arg("family"));

  m.def(
      "partition_report",
      [](const VectorFamily& f, bool render, bool ascii_only) {
        return radohorn::serialize_report(
            radohorn::run_partition(f, make_options(render, false, ascii_only)).document);
      },
      py::arg("family"), py::arg("render") = false, py::arg("ascii_only") = false);

  m.def(
      "analyze_report",
      [](const VectorFamily& f, int k) {
        return radohorn::serialize_report(
            radohorn::run_analyze(f, k, make_options(false, false, false)).document);
      },
      py::arg("family"), py::arg("k"));

  m.def(
      "construct_report",
      [](const VectorFamily& f, bool trace, bool ascii_only) {
        return radohorn::serialize_report(
            radohorn::run_construct(f, make_options(false, trace, ascii_only)).document);
      },
      py::arg("family"), py::arg("trace") = false, py::arg("ascii_only") = false);

  m.def(
      "witness_report",
      [](const VectorFamily& f, int k) {
        return radohorn::serialize_report(
            radohorn::run_witness(f, k, make_options(false, false, false)).document);
      },
      py::arg("family"), py::arg("k"));

  m.def(
      "remove_report",
      [](const VectorFamily& f, int k, int l) {
        return radohorn::serialize_report(
            radohorn::run_remove(f, k, l, make_options(false, false, false)).document);
      },
      py::arg("family"), py::arg("k"), py::arg("l"));

  m.def(
      "oracle_report",
      [](const VectorFamily& f) {
        return radohorn::serialize_report(
            radohorn::run_oracle(f, make_options(false, false, false)).document);
      },
      py::arg("family"));
}
