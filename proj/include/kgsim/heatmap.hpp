// Copyright 2026 The kgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "kgsim/experiment.hpp"

namespace kgsim {

struct HeatmapStyle {
    int cell_width = 56;
    int cell_height = 36;
    /// Print each probability inside its cell.
    bool annotate = true;
};

/// Probability-vs-time heatmap as a standalone SVG document. Sites run down
/// the vertical axis (site 0 at the top, labelled |00⟩ … for small
/// registers), time runs left to right, fill intensity is linear in p.
[[nodiscard]] std::string render_heatmap_svg(const ProbabilityTrace &trace, const HeatmapStyle &style = {});

/// "|01⟩"-style ket label of `site` on an n-qubit register, most-significant
/// qubit first.
[[nodiscard]] std::string ket_label(std::uint64_t site, int num_qubits);

} // namespace kgsim
