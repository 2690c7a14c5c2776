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

#include "tlc/diagram.h"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tlc/diagram_text.h"

namespace tlc {

std::string_view node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::kCup:
            return "cup";
        case NodeKind::kCap:
            return "cap";
        case NodeKind::kGate1:
            return "gate1";
        case NodeKind::kGate2:
            return "gate2";
        case NodeKind::kKet0:
            return "ket0";
    }
    return "?";
}

Node Node::cup(std::string id, std::string left, std::string right) {
    return {std::move(id), NodeKind::kCup, {std::move(left), std::move(right)}, {}, {}};
}

Node Node::cap(std::string id, std::string left, std::string right) {
    return {std::move(id), NodeKind::kCap, {std::move(left), std::move(right)}, {}, {}};
}

Node Node::gate1(std::string id, std::string in, std::string out, GateExpr gate) {
    return {std::move(id), NodeKind::kGate1, {std::move(in), std::move(out)}, std::move(gate), {}};
}

Node Node::gate2(std::string id, std::string in0, std::string in1, std::string out0, std::string out1,
                 TwoQubitGate box) {
    return {std::move(id),
            NodeKind::kGate2,
            {std::move(in0), std::move(in1), std::move(out0), std::move(out1)},
            {},
            std::move(box)};
}

Node Node::ket0(std::string id, std::string out) {
    return {std::move(id), NodeKind::kKet0, {std::move(out)}, {}, {}};
}

size_t Node::arity(NodeKind kind) {
    switch (kind) {
        case NodeKind::kCup:
        case NodeKind::kCap:
        case NodeKind::kGate1:
            return 2;
        case NodeKind::kGate2:
            return 4;
        case NodeKind::kKet0:
            return 1;
    }
    return 0;
}

bool Node::slot_consumes(size_t slot) const {
    switch (kind) {
        case NodeKind::kCup:
        case NodeKind::kKet0:
            return false;
        case NodeKind::kCap:
            return true;
        case NodeKind::kGate1:
            return slot == 0;
        case NodeKind::kGate2:
            return slot < 2;
    }
    return false;
}

// ----------------------------------------------------------------- Diagram

Node &Diagram::add(Node node) {
    nodes.push_back(std::move(node));
    return nodes.back();
}

std::optional<size_t> Diagram::index_of(std::string_view id) const {
    for (size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].id == id) {
            return k;
        }
    }
    return std::nullopt;
}

const Node &Diagram::node(std::string_view id) const {
    auto k = index_of(id);
    if (!k.has_value()) {
        throw std::out_of_range("no node '" + std::string(id) + "'");
    }
    return nodes[*k];
}

Node &Diagram::node(std::string_view id) {
    auto k = index_of(id);
    if (!k.has_value()) {
        throw std::out_of_range("no node '" + std::string(id) + "'");
    }
    return nodes[*k];
}

void Diagram::remove(std::string_view id) {
    auto k = index_of(id);
    if (!k.has_value()) {
        throw std::out_of_range("no node '" + std::string(id) + "'");
    }
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(*k));
}

std::string Diagram::fresh_node_id(std::string_view prefix) const {
    for (size_t k = 1;; k++) {
        std::string candidate = std::string(prefix) + std::to_string(k);
        if (!index_of(candidate).has_value()) {
            return candidate;
        }
    }
}

std::string Diagram::fresh_edge_id(std::string_view prefix) const {
    std::set<std::string> used(inputs.begin(), inputs.end());
    used.insert(outputs.begin(), outputs.end());
    for (const auto &n : nodes) {
        used.insert(n.edges.begin(), n.edges.end());
    }
    for (size_t k = 1;; k++) {
        std::string candidate = std::string(prefix) + std::to_string(k);
        if (!used.contains(candidate)) {
            return candidate;
        }
    }
}

std::map<std::string, EdgeEnds> Diagram::edge_index() const {
    std::map<std::string, EdgeEnds> index;
    for (size_t k = 0; k < inputs.size(); k++) {
        index[inputs[k]].producer = Port{Port::Where::kInput, 0, k};
    }
    for (size_t k = 0; k < outputs.size(); k++) {
        index[outputs[k]].consumer = Port{Port::Where::kOutput, 0, k};
    }
    for (size_t n = 0; n < nodes.size(); n++) {
        for (size_t s = 0; s < nodes[n].edges.size(); s++) {
            auto &ends = index[nodes[n].edges[s]];
            Port port{Port::Where::kNode, n, s};
            if (nodes[n].slot_consumes(s)) {
                ends.consumer = port;
            } else {
                ends.producer = port;
            }
        }
    }
    return index;
}

void Diagram::rename_edge(std::string_view from, std::string_view to) {
    auto swap_in = [&](std::string &e) {
        if (e == from) {
            e = std::string(to);
        }
    };
    std::for_each(inputs.begin(), inputs.end(), swap_in);
    std::for_each(outputs.begin(), outputs.end(), swap_in);
    for (auto &n : nodes) {
        std::for_each(n.edges.begin(), n.edges.end(), swap_in);
    }
}

std::vector<size_t> Diagram::topological_order(bool by_id) const {
    auto index = edge_index();
    std::vector<size_t> pending(nodes.size(), 0);
    std::map<std::string, std::vector<size_t>> waiting;  // edge -> consumers
    for (size_t n = 0; n < nodes.size(); n++) {
        for (size_t s = 0; s < nodes[n].edges.size(); s++) {
            if (!nodes[n].slot_consumes(s)) {
                continue;
            }
            const auto &e = nodes[n].edges[s];
            auto it = index.find(e);
            bool from_node = it != index.end() && it->second.producer.has_value() &&
                             it->second.producer->where == Port::Where::kNode;
            if (from_node) {
                pending[n]++;
                waiting[e].push_back(n);
            }
        }
    }
    auto later = [&](size_t a, size_t b) { return by_id ? nodes[a].id > nodes[b].id : a > b; };
    std::priority_queue<size_t, std::vector<size_t>, decltype(later)> ready(later);
    for (size_t n = 0; n < nodes.size(); n++) {
        if (pending[n] == 0) {
            ready.push(n);
        }
    }
    std::vector<size_t> order;
    while (!ready.empty()) {
        size_t n = ready.top();
        ready.pop();
        order.push_back(n);
        for (size_t s = 0; s < nodes[n].edges.size(); s++) {
            if (nodes[n].slot_consumes(s)) {
                continue;
            }
            auto it = waiting.find(nodes[n].edges[s]);
            if (it == waiting.end()) {
                continue;
            }
            for (size_t c : it->second) {
                if (--pending[c] == 0) {
                    ready.push(c);
                }
            }
        }
    }
    if (order.size() != nodes.size()) {
        throw std::invalid_argument("diagram is not acyclic in time");
    }
    return order;
}

size_t Diagram::count(NodeKind kind) const {
    return static_cast<size_t>(std::count_if(nodes.begin(), nodes.end(), [&](const Node &n) { return n.kind == kind; }));
}

// --------------------------------------------------------------- validate

std::vector<Violation> validate(const Diagram &d) {
    std::vector<Violation> out;
    auto add = [&](std::string kind, std::string where, std::string msg) {
        out.push_back({std::move(kind), std::move(where), std::move(msg)});
    };

    std::set<std::string> ids;
    for (const auto &n : d.nodes) {
        if (n.id.empty()) {
            add("bad node", "", "node with empty id");
        } else if (!ids.insert(n.id).second) {
            add("duplicate node", n.id, "node id '" + n.id + "' used twice");
        }
        if (n.edges.size() != Node::arity(n.kind)) {
            add("arity", n.id,
                "node '" + n.id + "' (" + std::string(node_kind_name(n.kind)) + ") has " +
                    std::to_string(n.edges.size()) + " slots, expected " + std::to_string(Node::arity(n.kind)));
        }
        for (size_t s = 0; s < n.edges.size(); s++) {
            if (n.edges[s].empty()) {
                add("dangling port", n.id + ":" + std::to_string(s),
                    "node '" + n.id + "' slot " + std::to_string(s) + " is unconnected");
            }
        }
        if (n.kind == NodeKind::kGate1 && !is_unitary(n.gate.matrix(), 1e-9)) {
            add("non-unitary", n.id, "gate on node '" + n.id + "' is not unitary");
        }
        if (n.kind == NodeKind::kGate2 && !is_unitary(n.box.matrix(), 1e-9)) {
            add("non-unitary", n.id, "box on node '" + n.id + "' is not unitary");
        }
    }

    auto check_dupes = [&](const std::vector<std::string> &list, const char *what) {
        std::set<std::string> seen;
        for (const auto &e : list) {
            if (!seen.insert(e).second) {
                add("duplicate boundary", e, std::string("edge '") + e + "' repeated in " + what);
            }
        }
    };
    check_dupes(d.inputs, "inputs");
    check_dupes(d.outputs, "outputs");

    // Count port uses per edge, split by direction.
    std::map<std::string, std::pair<size_t, size_t>> uses;  // producers, consumers
    for (const auto &e : d.inputs) {
        uses[e].first++;
    }
    for (const auto &e : d.outputs) {
        uses[e].second++;
    }
    for (const auto &n : d.nodes) {
        for (size_t s = 0; s < n.edges.size(); s++) {
            if (n.edges[s].empty()) {
                continue;
            }
            auto &u = uses[n.edges[s]];
            (n.slot_consumes(s) ? u.second : u.first)++;
        }
    }
    for (const auto &[edge, u] : uses) {
        auto [producers, consumers] = u;
        if (producers + consumers == 1) {
            add("dangling port", edge, "edge '" + edge + "' has only one end");
        } else if (producers > 1 || consumers > 1) {
            add("edge reuse", edge,
                "edge '" + edge + "' has " + std::to_string(producers) + " lower and " + std::to_string(consumers) +
                    " upper ends");
        } else if (producers == 0 || consumers == 0) {
            add("direction", edge, "edge '" + edge + "' does not run upward from one port to another");
        }
    }

    bool structural_ok = out.empty();
    if (structural_ok) {
        try {
            (void)d.topological_order();
        } catch (const std::invalid_argument &) {
            add("cycle", "", "diagram contains a cycle when read bottom to top");
        }
    }
    return out;
}

void require_valid(const Diagram &d) {
    auto violations = validate(d);
    if (!violations.empty()) {
        std::string msg = "invalid diagram '" + d.name + "':";
        for (const auto &v : violations) {
            msg += " [" + v.kind + "] " + v.message + ";";
        }
        throw std::invalid_argument(msg);
    }
}

std::string canonical_form(const Diagram &d) {
    auto order = d.topological_order(true);
    std::map<std::string, std::string> edge_names;
    auto name_edge = [&](const std::string &e) {
        auto [it, inserted] = edge_names.try_emplace(e, "e" + std::to_string(edge_names.size()));
        return it->second;
    };
    Diagram c;
    c.name = "canonical";
    c.scalar = d.scalar;
    for (const auto &e : d.inputs) {
        c.inputs.push_back(name_edge(e));
    }
    for (size_t k = 0; k < order.size(); k++) {
        Node n = d.nodes[order[k]];
        n.id = "n" + std::to_string(k);
        for (auto &e : n.edges) {
            e = name_edge(e);
        }
        c.nodes.push_back(std::move(n));
    }
    for (const auto &e : d.outputs) {
        c.outputs.push_back(name_edge(e));
    }
    return serialize(c);
}

}  // namespace tlc
