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

#include "tlc/diagram_text.h"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

namespace tlc {

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

namespace {

struct Token {
    std::string text;
    size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        if (k >= line.size()) {
            break;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        out.push_back({std::string(line.substr(start, k - start)), start + 1});
    }
    return out;
}

struct BoundaryRef {
    std::string edge;
    size_t line;
    size_t column;
};

class DocumentParser {
   public:
    std::vector<Diagram> parse(std::string_view text) {
        size_t line_no = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            line_no++;
            std::string_view line = text.substr(pos, end - pos);
            size_t hash = line.find('#');
            if (hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            parse_line(line_no, line);
            pos = end + 1;
        }
        finish();
        if (diagrams_.empty()) {
            throw ParseError(line_no, 1, "document contains no diagram");
        }
        return std::move(diagrams_);
    }

   private:
    void parse_line(size_t line_no, std::string_view line) {
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            return;
        }
        const std::string &head = tokens[0].text;
        if (head == "diagram") {
            finish();
            if (tokens.size() != 2) {
                throw ParseError(line_no, tokens[0].column, "expected 'diagram <name>'");
            }
            diagrams_.emplace_back();
            diagrams_.back().name = tokens[1].text;
            boundary_.clear();
            seen_scalar_ = seen_input_ = seen_output_ = false;
            return;
        }
        if (diagrams_.empty()) {
            throw ParseError(line_no, tokens[0].column, "expected 'diagram <name>' before '" + head + "'");
        }
        Diagram &d = diagrams_.back();
        if (head == "scalar") {
            if (seen_scalar_) {
                throw ParseError(line_no, tokens[0].column, "duplicate scalar line");
            }
            seen_scalar_ = true;
            if (tokens.size() != 4) {
                throw ParseError(line_no, tokens[0].column, "expected 'scalar <re> <im> <sqrt2_exp>'");
            }
            double re = number(tokens[1], line_no);
            double im = number(tokens[2], line_no);
            char *end = nullptr;
            long exp = std::strtol(tokens[3].text.c_str(), &end, 10);
            if (*end != '\0') {
                throw ParseError(line_no, tokens[3].column, "expected an integer, got '" + tokens[3].text + "'");
            }
            d.scalar = Scalar(checked_complex({re, im}), static_cast<int>(exp));
            return;
        }
        if (head == "input" || head == "output") {
            bool &seen = head == "input" ? seen_input_ : seen_output_;
            if (seen) {
                throw ParseError(line_no, tokens[0].column, "duplicate " + head + " line");
            }
            seen = true;
            auto &list = head == "input" ? d.inputs : d.outputs;
            for (size_t k = 1; k < tokens.size(); k++) {
                list.push_back(tokens[k].text);
                boundary_.push_back({tokens[k].text, line_no, tokens[k].column});
            }
            return;
        }
        if (head == "node") {
            parse_node(line_no, line, tokens, d);
            return;
        }
        throw ParseError(line_no, tokens[0].column,
                         "unknown directive '" + head + "' (expected diagram, scalar, input, output or node)");
    }

    void parse_node(size_t line_no, std::string_view line, const std::vector<Token> &tokens, Diagram &d) {
        if (tokens.size() < 3) {
            throw ParseError(line_no, tokens[0].column, "expected 'node <id> <kind> ...'");
        }
        const Token &kind_tok = tokens[2];
        NodeKind kind;
        if (kind_tok.text == "cup") {
            kind = NodeKind::kCup;
        } else if (kind_tok.text == "cap") {
            kind = NodeKind::kCap;
        } else if (kind_tok.text == "gate1") {
            kind = NodeKind::kGate1;
        } else if (kind_tok.text == "gate2") {
            kind = NodeKind::kGate2;
        } else if (kind_tok.text == "ket0") {
            kind = NodeKind::kKet0;
        } else {
            throw ParseError(line_no, kind_tok.column,
                             "unknown node kind '" + kind_tok.text + "' (expected cup, cap, gate1, gate2 or ket0)");
        }
        bool has_gate = kind == NodeKind::kGate1 || kind == NodeKind::kGate2;
        std::vector<std::string> edges;
        size_t k = 3;
        for (; k < tokens.size() && !tokens[k].text.starts_with("gate="); k++) {
            edges.push_back(tokens[k].text);
        }
        size_t arity = Node::arity(kind);
        if (edges.size() != arity) {
            throw ParseError(line_no, kind_tok.column,
                             kind_tok.text + " takes " + std::to_string(arity) + " edges, got " +
                                 std::to_string(edges.size()));
        }
        Node node;
        node.id = tokens[1].text;
        node.kind = kind;
        node.edges = std::move(edges);
        if (!has_gate) {
            if (k < tokens.size()) {
                throw ParseError(line_no, tokens[k].column, kind_tok.text + " takes no gate attribute");
            }
            d.add(std::move(node));
            return;
        }
        if (k >= tokens.size()) {
            throw ParseError(line_no, kind_tok.column, kind_tok.text + " requires gate=<expr>");
        }
        // The gate expression runs to the end of the line and may contain spaces.
        size_t col = tokens[k].column;
        std::string expr(line.substr(col - 1 + 5));
        while (!expr.empty() && (expr.back() == ' ' || expr.back() == '\t' || expr.back() == '\r')) {
            expr.pop_back();
        }
        try {
            if (kind == NodeKind::kGate1) {
                node.gate = GateExpr::parse(expr);
            } else {
                node.box = TwoQubitGate::parse(expr);
            }
        } catch (const std::invalid_argument &ex) {
            throw ParseError(line_no, col + 5, ex.what());
        }
        d.add(std::move(node));
    }

    double number(const Token &t, size_t line_no) {
        char *end = nullptr;
        double v = std::strtod(t.text.c_str(), &end);
        if (t.text.empty() || *end != '\0') {
            throw ParseError(line_no, t.column, "expected a number, got '" + t.text + "'");
        }
        return v;
    }

    // Boundary edges must be attached to a node, or pass straight from
    // input to output.
    void finish() {
        if (diagrams_.empty()) {
            return;
        }
        const Diagram &d = diagrams_.back();
        std::set<std::string> used;
        for (const auto &n : d.nodes) {
            used.insert(n.edges.begin(), n.edges.end());
        }
        std::set<std::string> ins(d.inputs.begin(), d.inputs.end());
        std::set<std::string> outs(d.outputs.begin(), d.outputs.end());
        for (const auto &b : boundary_) {
            bool passthrough = ins.contains(b.edge) && outs.contains(b.edge);
            if (!used.contains(b.edge) && !passthrough) {
                throw ParseError(b.line, b.column, "undefined edge '" + b.edge + "'");
            }
        }
        boundary_.clear();
    }

    std::vector<Diagram> diagrams_;
    std::vector<BoundaryRef> boundary_;
    bool seen_scalar_ = false;
    bool seen_input_ = false;
    bool seen_output_ = false;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<Diagram> parse_document(std::string_view text) {
    return DocumentParser().parse(text);
}

Diagram parse_diagram(std::string_view text) {
    auto all = parse_document(text);
    if (all.size() != 1) {
        throw ParseError(1, 1, "expected exactly one diagram, found " + std::to_string(all.size()));
    }
    return std::move(all[0]);
}

std::string serialize(const Diagram &d) {
    std::string out = "diagram " + d.name + "\n";
    out += "scalar " + format_double(d.scalar.coeff().real()) + " " + format_double(d.scalar.coeff().imag()) + " " +
           std::to_string(d.scalar.sqrt2_exp()) + "\n";
    out += "input";
    for (const auto &e : d.inputs) {
        out += " " + e;
    }
    out += "\noutput";
    for (const auto &e : d.outputs) {
        out += " " + e;
    }
    out += "\n";
    for (size_t k : d.topological_order(true)) {
        const Node &n = d.nodes[k];
        out += "node " + n.id + " " + std::string(node_kind_name(n.kind));
        for (const auto &e : n.edges) {
            out += " " + e;
        }
        if (n.kind == NodeKind::kGate1) {
            out += " gate=" + n.gate.str();
        } else if (n.kind == NodeKind::kGate2) {
            out += " gate=" + n.box.str();
        }
        out += "\n";
    }
    return out;
}

std::string serialize_document(const std::vector<Diagram> &diagrams) {
    std::string out;
    for (size_t k = 0; k < diagrams.size(); k++) {
        if (k > 0) {
            out += "\n";
        }
        out += serialize(diagrams[k]);
    }
    return out;
}

}  // namespace tlc
