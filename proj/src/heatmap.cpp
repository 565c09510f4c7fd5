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

#include "kgsim/heatmap.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "kgsim/error.hpp"

namespace kgsim {

namespace {

constexpr int kLeftMargin = 84;
constexpr int kTopMargin = 44;
constexpr int kBottomMargin = 56;
constexpr int kRightMargin = 24;

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string compact(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

/// White at p = 0 to deep blue (#08306b) at p = 1.
std::string fill_colour(double p) {
    p = std::clamp(p, 0.0, 1.0);
    const auto mix = [p](int lo, int hi) { return static_cast<int>(lo + (hi - lo) * p + 0.5); };
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(255, 8), mix(255, 48), mix(255, 107));
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string ket_label(std::uint64_t site, int num_qubits) {
    std::string bits;
    for (int q = num_qubits - 1; q >= 0; --q) {
        bits += ((site >> q) & 1U) ? '1' : '0';
    }
    return "|" + bits + "⟩";
}

std::string render_heatmap_svg(const ProbabilityTrace &trace, const HeatmapStyle &style) {
    require(!trace.rows.empty() && trace.rows.size() == trace.times.size(), "cannot render an empty trace");
    const std::size_t sites = trace.num_sites();
    const std::size_t cols = trace.times.size();
    int num_qubits = 0;
    while ((std::size_t{1} << num_qubits) < sites) {
        ++num_qubits;
    }

    const int width = kLeftMargin + static_cast<int>(cols) * style.cell_width + kRightMargin;
    const int height = kTopMargin + static_cast<int>(sites) * style.cell_height + kBottomMargin;

    std::string title = "site probability vs time";
    if (trace.metadata.is_object()) {
        const std::string label = trace.metadata.value("label", std::string{});
        const std::string component = trace.metadata.value("component", std::string{});
        if (!label.empty()) {
            title = label + ": " + title;
        }
        if (!component.empty()) {
            title += " (" + component + ")";
        }
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">" << escape(title)
        << "</text>\n";

    for (std::size_t j = 0; j < sites; ++j) {
        const int y = kTopMargin + static_cast<int>(j) * style.cell_height;
        const std::string label = num_qubits <= 6 ? ket_label(j, num_qubits) : std::to_string(j);
        svg << "<text x=\"" << kLeftMargin - 8 << "\" y=\"" << y + style.cell_height / 2 + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << escape(label) << "</text>\n";
        for (std::size_t i = 0; i < cols; ++i) {
            const double p = trace.rows[i][j];
            const int x = kLeftMargin + static_cast<int>(i) * style.cell_width;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << style.cell_width << "\" height=\""
                << style.cell_height << "\" fill=\"" << fill_colour(p) << "\" stroke=\"#cccccc\"/>\n";
            if (style.annotate) {
                svg << "<text x=\"" << x + style.cell_width / 2 << "\" y=\"" << y + style.cell_height / 2 + 4
                    << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" << (p > 0.55 ? "#ffffff" : "#000000")
                    << "\">" << fixed(p, 2) << "</text>\n";
            }
        }
    }

    const int axis_y = kTopMargin + static_cast<int>(sites) * style.cell_height;
    for (std::size_t i = 0; i < cols; ++i) {
        const int x = kLeftMargin + static_cast<int>(i) * style.cell_width + style.cell_width / 2;
        svg << "<text x=\"" << x << "\" y=\"" << axis_y + 18 << "\" font-size=\"12\" text-anchor=\"middle\">"
            << compact(trace.times[i]) << "</text>\n";
    }
    svg << "<text x=\"" << kLeftMargin + static_cast<int>(cols) * style.cell_width / 2 << "\" y=\""
        << axis_y + 42 << "\" font-size=\"12\" text-anchor=\"middle\">t</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace kgsim
