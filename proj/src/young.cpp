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

#include "radohorn/young.hpp"

#include <algorithm>

#include "radohorn/errors.hpp"

namespace radohorn {

namespace {

// Box-drawing character for a junction with the given arms. At every
// junction position at least one vertical arm is present.
std::string junction(bool up, bool down, bool left, bool right, YoungStyle style) {
  if (style == YoungStyle::kAscii) return "+";
  if (up && down && left && right) return "┼";  // ┼
  if (up && down && right) return "├";          // ├
  if (up && down && left) return "┤";           // ┤
  if (up && left && right) return "┴";          // ┴
  if (down && left && right) return "┬";        // ┬
  if (up && right) return "└";                  // └
  if (up && left) return "┘";                   // ┘
  if (down && right) return "┌";                // ┌
  if (down && left) return "┐";                 // ┐
  return "─";                                   // ─
}

// Horizontal border between a row of width above and one of width below;
// width -1 marks a missing row (top and bottom borders).
std::string border_line(int above, int below, int cell_width, YoungStyle style) {
  const std::string dash = style == YoungStyle::kAscii ? "-" : "─";
  const int span = std::max(above, below);
  std::string line;
  for (int p = 0; p <= span; ++p) {
    line += junction(p <= above && above >= 0, p <= below && below >= 0, p > 0, p < span, style);
    if (p < span) {
      for (int i = 0; i < cell_width; ++i) line += dash;
    }
  }
  return line;
}

}  // namespace

std::string render_young(const PartitionProfile& profile, const CellLabels& labels,
                         YoungStyle style) {
  const int rows = static_cast<int>(profile.sizes.size());
  if (rows == 0) return "";
  for (int s : profile.sizes) {
    if (s < 1) throw Error("profile entries must be positive");
  }
  int cell_width = 2;
  for (const auto& [cell, text] : labels) {
    const auto [row, col] = cell;
    if (row < 1 || row > rows || col < 1 || col > profile.sizes[static_cast<std::size_t>(row - 1)]) {
      throw Error("label outside diagram at row " + std::to_string(row) + ", column " +
                  std::to_string(col));
    }
    cell_width = std::max(cell_width, static_cast<int>(text.size()));
  }

  const std::string bar = style == YoungStyle::kAscii ? "|" : "│";
  std::string out;
  for (int r = 0; r < rows; ++r) {
    const int width = profile.sizes[static_cast<std::size_t>(r)];
    out += border_line(r == 0 ? -1 : profile.sizes[static_cast<std::size_t>(r - 1)], width,
                       cell_width, style);
    out += "\n";
    for (int c = 1; c <= width; ++c) {
      out += bar;
      std::string text;
      const auto it = labels.find({r + 1, c});
      if (it != labels.end()) text = it->second;
      const int pad = cell_width - static_cast<int>(text.size());
      out += std::string(static_cast<std::size_t>(pad / 2), ' ');
      out += text;
      out += std::string(static_cast<std::size_t>(pad - pad / 2), ' ');
    }
    out += bar;
    out += "\n";
  }
  out += border_line(profile.sizes[static_cast<std::size_t>(rows - 1)], -1, cell_width, style);
  out += "\n";
  return out;
}

}  // namespace radohorn
