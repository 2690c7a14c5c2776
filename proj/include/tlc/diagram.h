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

#ifndef TLC_DIAGRAM_H
#define TLC_DIAGRAM_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/gate_expr.h"
#include "tlc/scalar.h"

namespace tlc {

enum class NodeKind { kCup, kCap, kGate1, kGate2, kKet0 };

std::string_view node_kind_name(NodeKind kind);

/// A diagram element. `edges[slot]` names the wire attached to each slot:
///
///   cup   : [left_out, right_out]        (Bell pair, both legs point up)
///   cap   : [left_in, right_in]          (Bell effect, both legs end here)
///   gate1 : [in, out]
///   gate2 : [in0, in1, out0, out1]
///   ket0  : [out]
struct Node {
    std::string id;
    NodeKind kind = NodeKind::kCup;
    std::vector<std::string> edges;
    GateExpr gate;     // gate1
    TwoQubitGate box;  // gate2

    static Node cup(std::string id, std::string left, std::string right);
    static Node cap(std::string id, std::string left, std::string right);
    static Node gate1(std::string id, std::string in, std::string out, GateExpr gate);
    static Node gate2(std::string id, std::string in0, std::string in1, std::string out0, std::string out1,
                      TwoQubitGate box);
    static Node ket0(std::string id, std::string out);

    static size_t arity(NodeKind kind);
    /// True when the slot's wire arrives from below (the node consumes it).
    bool slot_consumes(size_t slot) const;

    bool operator==(const Node &other) const = default;
};

/// One end of an edge: a node slot or a boundary position.
struct Port {
    enum class Where { kNode, kInput, kOutput };
    Where where = Where::kNode;
    size_t node = 0;   // index into Diagram::nodes
    size_t slot = 0;   // node slot, or position in inputs/outputs
};

/// The producer (lower end) and consumer (upper end) of an edge.
struct EdgeEnds {
    std::optional<Port> producer;
    std::optional<Port> consumer;
};

struct Violation {
    std::string kind;  // "dangling port", "edge reuse", "cycle", ...
    std::string where;
    std::string message;
};

/// A tensor-network diagram: nodes joined by named edges, open input legs at
/// the bottom (earlier time), open output legs at the top, times a Scalar.
/// Planarity is not required; time flows from inputs to outputs.
class Diagram {
   public:
    std::string name = "diagram";
    std::vector<Node> nodes;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    Scalar scalar;

    Node &add(Node node);
    std::optional<size_t> index_of(std::string_view id) const;
    const Node &node(std::string_view id) const;
    Node &node(std::string_view id);
    void remove(std::string_view id);

    /// Smallest "<prefix><k>" not used by any node (or edge).
    std::string fresh_node_id(std::string_view prefix) const;
    std::string fresh_edge_id(std::string_view prefix) const;

    /// Producer/consumer of every edge mentioned anywhere in the diagram.
    std::map<std::string, EdgeEnds> edge_index() const;
    /// Replaces every use of edge `from` (slots and boundary lists) by `to`.
    void rename_edge(std::string_view from, std::string_view to);

    /// Node indices in time order. Ready nodes are taken by id when
    /// `by_id` is set, otherwise by insertion order. Throws on a cycle.
    std::vector<size_t> topological_order(bool by_id = true) const;

    size_t count(NodeKind kind) const;
};

/// Every invariant violation (empty when the diagram is well formed).
std::vector<Violation> validate(const Diagram &d);
void require_valid(const Diagram &d);

/// Relabels nodes and edges in canonical order (topological, ties by id) and
/// renders the result; equal strings mean isomorphic diagrams.
std::string canonical_form(const Diagram &d);

}  // namespace tlc

#endif
