// Copyright 2026 The tlcalc Authors
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

#include "tlc/render.h"

#include <algorithm>
#include <map>
#include <vector>

namespace tlc {

namespace {

// Number of code points, which is the display width for every glyph used here.
size_t display_width(const std::string &s) {
    size_t n = 0;
    for (unsigned char c : s) {
        n += (c & 0xC0) != 0x80;
    }
    return n;
}

std::vector<std::string> split_glyphs(const std::string &s) {
    std::vector<std::string> out;
    for (size_t k = 0; k < s.size();) {
        size_t len = 1;
        unsigned char c = static_cast<unsigned char>(s[k]);
        if (c >= 0xF0) {
            len = 4;
        } else if (c >= 0xE0) {
            len = 3;
        } else if (c >= 0xC0) {
            len = 2;
        }
        out.push_back(s.substr(k, len));
        k += len;
    }
    return out;
}

class Canvas {
   public:
    Canvas(size_t rows, size_t cols) : cells_(rows, std::vector<std::string>(cols, " ")) {
    }

    void put(size_t row, size_t col, const std::string &text) {
        for (const auto &g : split_glyphs(text)) {
            if (col < cells_[row].size()) {
                cells_[row][col] = g;
            }
            col++;
        }
    }

    std::string str() const {
        std::string out;
        for (size_t r = cells_.size(); r-- > 0;) {
            std::string line;
            for (const auto &c : cells_[r]) {
                line += c;
            }
            line.erase(line.find_last_not_of(' ') + 1);
            if (!line.empty() || !out.empty()) {
                out += line + "\n";
            }
        }
        while (out.ends_with("\n\n")) {
            out.pop_back();
        }
        return out;
    }

   private:
    std::vector<std::vector<std::string>> cells_;
};

}  // namespace

std::string render_ascii(const Diagram &d) {
    require_valid(d);
    auto order = d.topological_order(false);

    // Column assignment.
    std::map<std::string, size_t> column;
    size_t next_column = 0;
    for (const auto &e : d.inputs) {
        column[e] = next_column++;
    }
    for (size_t n : order) {
        const Node &node = d.nodes[n];
        switch (node.kind) {
            case NodeKind::kCup:
                column[node.edges[0]] = next_column++;
                column[node.edges[1]] = next_column++;
                break;
            case NodeKind::kKet0:
                column[node.edges[0]] = next_column++;
                break;
            case NodeKind::kGate1:
                column[node.edges[1]] = column.at(node.edges[0]);
                break;
            case NodeKind::kGate2:
                column[node.edges[2]] = column.at(node.edges[0]);
                column[node.edges[3]] = column.at(node.edges[1]);
                break;
            case NodeKind::kCap:
                break;
        }
    }

    // Column pitch: wide enough for every label that hangs to the right.
    size_t pitch = 4;
    auto widen = [&](size_t w) { pitch = std::max(pitch, w + 2); };
    for (const auto &node : d.nodes) {
        if (node.kind == NodeKind::kGate1) {
            widen(display_width("*[" + node.gate.str() + "]"));
        } else if (node.kind == NodeKind::kGate2 && node.box.kind == TwoQubitGate::Kind::kCu) {
            widen(display_width("[" + node.box.u.str() + "]"));
        }
    }
    for (const auto &e : d.inputs) {
        widen(display_width(e));
    }
    for (const auto &e : d.outputs) {
        widen(display_width(e));
    }

    // Rows: 0 input labels, then a node row and a spacer row per node, then
    // output labels.
    size_t rows = 2 * order.size() + 3;
    size_t width = std::max<size_t>(1, next_column) * pitch;
    Canvas canvas(rows, width);
    std::vector<size_t> first_row(next_column, 0), last_row(next_column, rows - 1);
    std::vector<bool> alive(next_column, false);
    for (const auto &e : d.inputs) {
        canvas.put(0, column.at(e) * pitch, e);
        first_row[column.at(e)] = 1;
        alive[column.at(e)] = true;
    }
    for (const auto &e : d.outputs) {
        canvas.put(rows - 1, column.at(e) * pitch, e);
        last_row[column.at(e)] = rows - 2;
    }

    auto horizontal = [&](size_t row, size_t a, size_t b, const std::string &fill) {
        for (size_t x = std::min(a, b) + 1; x < std::max(a, b); x++) {
            canvas.put(row, x, fill);
        }
    };

    std::map<std::pair<size_t, size_t>, std::string> glyph;
    for (size_t k = 0; k < order.size(); k++) {
        const Node &node = d.nodes[order[k]];
        size_t row = 2 * k + 1;
        switch (node.kind) {
            case NodeKind::kCup: {
                size_t a = column.at(node.edges[0]), b = column.at(node.edges[1]);
                first_row[a] = first_row[b] = row + 1;
                alive[a] = alive[b] = true;
                horizontal(row, a * pitch, b * pitch, "_");
                glyph[{row, a}] = "\\";
                glyph[{row, b}] = "/";
                break;
            }
            case NodeKind::kCap: {
                size_t a = column.at(node.edges[0]), b = column.at(node.edges[1]);
                last_row[a] = last_row[b] = row - 1;
                horizontal(row, a * pitch, b * pitch, "‾");
                glyph[{row, std::min(a, b)}] = "/";
                glyph[{row, std::max(a, b)}] = "\\";
                break;
            }
            case NodeKind::kKet0: {
                size_t a = column.at(node.edges[0]);
                first_row[a] = row + 1;
                alive[a] = true;
                glyph[{row, a}] = "∇";
                break;
            }
            case NodeKind::kGate1: {
                size_t a = column.at(node.edges[0]);
                glyph[{row, a}] = "*[" + node.gate.str() + "]";
                break;
            }
            case NodeKind::kGate2: {
                size_t a = column.at(node.edges[0]), b = column.at(node.edges[1]);
                std::string first = "*", second = "*";
                if (node.box.kind == TwoQubitGate::Kind::kCnot) {
                    (node.box.control_slot == 0 ? second : first) = "⊕";
                } else if (node.box.kind == TwoQubitGate::Kind::kCu) {
                    second = "[" + node.box.u.str() + "]";
                }
                horizontal(row, a * pitch, b * pitch, "─");
                glyph[{row, a}] = first;
                glyph[{row, b}] = second;
                break;
            }
        }
    }

    for (size_t c = 0; c < next_column; c++) {
        if (!alive[c]) {
            continue;
        }
        for (size_t r = first_row[c]; r <= last_row[c] && r < rows; r++) {
            canvas.put(r, c * pitch, "|");
        }
    }
    for (const auto &[at, text] : glyph) {
        canvas.put(at.first, at.second * pitch, text);
    }

    std::string header = "diagram " + d.name + "  scalar " + d.scalar.str() + "\n";
    return header + canvas.str();
}

}  // namespace tlc
