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

#include "tlc/rewrite.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "tlc/diagram_text.h"
#include "tlc/evaluate.h"
#include "tlc/gates.h"

namespace tlc {

namespace {

constexpr std::array<std::string_view, 6> kRuleNames{
    "R1_slide_cup", "R2_slide_cap", "R3_yank", "R4_fuse", "R5_push_through_box", "R6_commute",
};

[[noreturn]] void mismatch(const RuleSite &site, const std::string &why) {
    std::string locus;
    for (const auto &id : site.locus) {
        locus += (locus.empty() ? "" : ",") + id;
    }
    throw RewriteError(std::string(rule_name(site.rule)) + " does not apply at [" + locus + "]: " + why);
}

size_t require_node(const Diagram &d, const RuleSite &site, size_t k, NodeKind kind) {
    if (site.locus.size() <= k) {
        mismatch(site, "locus is too short");
    }
    auto idx = d.index_of(site.locus[k]);
    if (!idx.has_value()) {
        mismatch(site, "no node '" + site.locus[k] + "'");
    }
    if (d.nodes[*idx].kind != kind) {
        mismatch(site, "'" + site.locus[k] + "' is not a " + std::string(node_kind_name(kind)));
    }
    return *idx;
}

void require_locus_size(const RuleSite &site, size_t n) {
    if (site.locus.size() != n) {
        mismatch(site, "expected " + std::to_string(n) + " node ids");
    }
}

void remove_ids(Diagram &d, const std::vector<std::string> &ids) {
    for (const auto &id : ids) {
        d.remove(id);
    }
}

// Follows an upward wire through single-qubit dots. Returns the dots passed
// and the port that finally consumes the wire.
struct Walk {
    std::vector<size_t> dots;
    std::optional<Port> end;
};

Walk walk_up(const Diagram &d, const std::map<std::string, EdgeEnds> &index, std::string edge) {
    Walk w;
    while (true) {
        auto it = index.find(edge);
        if (it == index.end() || !it->second.consumer.has_value()) {
            return w;
        }
        const Port &c = *it->second.consumer;
        if (c.where == Port::Where::kNode && d.nodes[c.node].kind == NodeKind::kGate1) {
            w.dots.push_back(c.node);
            edge = d.nodes[c.node].edges[1];
            continue;
        }
        w.end = c;
        return w;
    }
}

// True when `target` can be reached from node `from` by following wires
// upward.
bool reaches(const Diagram &d, const std::map<std::string, EdgeEnds> &index, size_t from, size_t target) {
    std::set<size_t> seen{from};
    std::vector<size_t> stack{from};
    while (!stack.empty()) {
        size_t n = stack.back();
        stack.pop_back();
        if (n == target) {
            return true;
        }
        for (size_t s = 0; s < d.nodes[n].edges.size(); s++) {
            if (d.nodes[n].slot_consumes(s)) {
                continue;
            }
            const auto &c = index.at(d.nodes[n].edges[s]).consumer;
            if (c.has_value() && c->where == Port::Where::kNode && seen.insert(c->node).second) {
                stack.push_back(c->node);
            }
        }
    }
    return false;
}

// A cup and a cap joined on one leg can be straightened unless the cap's
// other leg is fed from the cup's other leg, which would close a time loop.
bool straightenable(const Diagram &d, const std::map<std::string, EdgeEnds> &index, size_t cup, size_t cap,
                    size_t cap_slot) {
    const auto &p = index.at(d.nodes[cap].edges[1 - cap_slot]).producer;
    return !(p.has_value() && p->where == Port::Where::kNode && reaches(d, index, cup, p->node));
}

// ------------------------------------------------------------------ rules

Rewritten slide_cup(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t ci = require_node(d, site, 0, NodeKind::kCup);
    size_t gi = require_node(d, site, 1, NodeKind::kGate1);
    Diagram out = d;
    Node &cup = out.nodes[ci];
    Node &g = out.nodes[gi];
    size_t s = cup.edges[0] == g.edges[0] ? 0 : cup.edges[1] == g.edges[0] ? 1 : 2;
    if (s == 2) {
        mismatch(site, "dot does not sit on a leg of the cup");
    }
    std::string e_in = g.edges[0], e_out = g.edges[1], other = cup.edges[1 - s];
    cup.edges[s] = e_out;
    cup.edges[1 - s] = e_in;
    g.edges = {e_in, other};
    g.gate = g.gate.transpose();
    return {std::move(out), Scalar::one()};
}

Rewritten slide_cap(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t ki = require_node(d, site, 0, NodeKind::kCap);
    size_t gi = require_node(d, site, 1, NodeKind::kGate1);
    Diagram out = d;
    Node &cap = out.nodes[ki];
    Node &g = out.nodes[gi];
    size_t t = cap.edges[0] == g.edges[1] ? 0 : cap.edges[1] == g.edges[1] ? 1 : 2;
    if (t == 2) {
        mismatch(site, "dot does not feed a leg of the cap");
    }
    std::string e_in = g.edges[0], e_out = g.edges[1], other = cap.edges[1 - t];
    cap.edges[t] = e_in;
    cap.edges[1 - t] = e_out;
    g.edges = {other, e_out};
    g.gate = g.gate.transpose();
    return {std::move(out), Scalar::one()};
}

Rewritten yank(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t ci = require_node(d, site, 0, NodeKind::kCup);
    size_t ki = require_node(d, site, 1, NodeKind::kCap);
    const Node &cup = d.nodes[ci];
    const Node &cap = d.nodes[ki];
    auto index = d.edge_index();

    Walk w0 = walk_up(d, index, cup.edges[0]);
    Walk w1 = walk_up(d, index, cup.edges[1]);
    auto ends_at_cap = [&](const Walk &w) {
        return w.end.has_value() && w.end->where == Port::Where::kNode && w.end->node == ki;
    };
    if (ends_at_cap(w0) && ends_at_cap(w1)) {
        // Closed loop: <cap| (1 (x) U) |cup> = tr(U) / 2.
        if (w0.dots.size() + w1.dots.size() > 1) {
            mismatch(site, "closed loop carries more than one dot");
        }
        Diagram out = d;
        std::vector<std::string> gone{cup.id, cap.id};
        Complex tr = 2;
        for (size_t g : w0.dots.empty() ? w1.dots : w0.dots) {
            tr = d.nodes[g].gate.matrix().trace();
            gone.push_back(d.nodes[g].id);
        }
        Scalar delta(tr * 0.5);
        remove_ids(out, gone);
        out.scalar *= delta;
        return {std::move(out), delta};
    }

    size_t s = 2, t = 2;
    for (size_t a = 0; a < 2 && s == 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            if (cup.edges[a] == cap.edges[b]) {
                s = a;
                t = b;
                break;
            }
        }
    }
    if (s == 2) {
        mismatch(site, "cup and cap do not share a wire");
    }
    if (!straightenable(d, index, ci, ki, t)) {
        mismatch(site, "straightening would feed the cap from its own cup");
    }
    std::string cup_other = cup.edges[1 - s], cap_other = cap.edges[1 - t];
    Diagram out = d;
    remove_ids(out, {cup.id, cap.id});
    out.rename_edge(cup_other, cap_other);
    out.scalar *= Scalar::half();
    return {std::move(out), Scalar::half()};
}

Rewritten fuse(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t lo = require_node(d, site, 0, NodeKind::kGate1);
    size_t hi = require_node(d, site, 1, NodeKind::kGate1);
    if (d.nodes[lo].edges[1] != d.nodes[hi].edges[0]) {
        mismatch(site, "dots are not consecutive on one wire");
    }
    Diagram out = d;
    Node &a = out.nodes[lo];
    a.gate = d.nodes[hi].gate * d.nodes[lo].gate;
    a.edges[1] = d.nodes[hi].edges[1];
    std::string in = a.edges[0], upper = a.edges[1];
    bool trivial = a.gate.is_identity();
    out.remove(d.nodes[hi].id);
    if (trivial) {
        out.remove(d.nodes[lo].id);
        out.rename_edge(upper, in);
    }
    return {std::move(out), Scalar::one()};
}

Rewritten push(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t gi = require_node(d, site, 0, NodeKind::kGate1);
    size_t bi = require_node(d, site, 1, NodeKind::kGate2);
    const Node &g = d.nodes[gi];
    const Node &box = d.nodes[bi];
    size_t s = box.edges[0] == g.edges[1] ? 0 : box.edges[1] == g.edges[1] ? 1 : 2;
    if (s == 2) {
        mismatch(site, "dot does not feed an input of the box");
    }
    ComplexMatrix dot = g.gate.matrix();
    ComplexMatrix placed = s == 0 ? tensor(dot, gates::I()) : tensor(gates::I(), dot);
    ComplexMatrix u = box.box.matrix();
    auto match = match_pauli(u * placed * dagger(u));
    if (!match.has_value()) {
        mismatch(site, "conjugating the dot through the box does not give a Pauli pair");
    }
    const PauliString *image = &match->pauli;
    Scalar delta(match->phase);
    Diagram out = d;
    std::string box_id = box.id;
    std::string dot_in = g.edges[0];
    out.remove(g.id);
    out.node(box_id).edges[s] = dot_in;
    for (size_t j = 0; j < 2; j++) {
        bool x = image->x(j), z = image->z(j);
        if (!x && !z) {
            continue;
        }
        std::string wire = out.fresh_edge_id("w");
        std::string id = out.fresh_node_id("p");
        Node &b = out.node(box_id);
        std::string old = b.edges[2 + j];
        b.edges[2 + j] = wire;
        out.add(Node::gate1(id, wire, old, GateExpr::pauli(x, z)));
    }
    out.scalar *= delta;
    return {std::move(out), delta};
}

Diagram local_pair(const Node &a, const Node &b) {
    Diagram m;
    m.nodes = {a, b};
    std::set<std::string> produced, consumed;
    for (const auto &n : m.nodes) {
        for (size_t s = 0; s < n.edges.size(); s++) {
            (n.slot_consumes(s) ? consumed : produced).insert(n.edges[s]);
        }
    }
    for (const auto &e : consumed) {
        if (!produced.contains(e)) {
            m.inputs.push_back(e);
        }
    }
    for (const auto &e : produced) {
        if (!consumed.contains(e)) {
            m.outputs.push_back(e);
        }
    }
    return m;
}

Rewritten commute(const Diagram &d, const RuleSite &site) {
    require_locus_size(site, 2);
    size_t ai = require_node(d, site, 0, NodeKind::kGate2);
    size_t bi = require_node(d, site, 1, NodeKind::kGate2);
    Node lower = d.nodes[ai], upper = d.nodes[bi];
    bool shared = false;
    for (size_t i = 0; i < 2; i++) {
        std::string e = d.nodes[ai].edges[2 + i];
        for (size_t j = 0; j < 2; j++) {
            if (d.nodes[bi].edges[j] != e) {
                continue;
            }
            shared = true;
            std::string x = d.nodes[ai].edges[i], z = d.nodes[bi].edges[2 + j];
            upper.edges[j] = x;
            upper.edges[2 + j] = e;
            lower.edges[i] = e;
            lower.edges[2 + i] = z;
        }
    }
    if (!shared) {
        mismatch(site, "boxes are not adjacent");
    }
    Diagram before = local_pair(d.nodes[ai], d.nodes[bi]);
    Diagram after = before;
    after.nodes = {lower, upper};
    if (evaluate(before).max_abs_diff(evaluate(after)) > kTolerance) {
        mismatch(site, "boxes do not commute");
    }
    Diagram out = d;
    out.nodes[ai] = lower;
    out.nodes[bi] = upper;
    if (!validate(out).empty()) {
        mismatch(site, "swapping the boxes would break time order");
    }
    return {std::move(out), Scalar::one()};
}

// ------------------------------------------------------------ strategy

struct ZigZag {
    size_t cup;
    size_t slot;
    size_t cap;
    std::vector<size_t> path;
    bool loop;
};

std::vector<ZigZag> find_zigzags(const Diagram &d, const std::map<std::string, EdgeEnds> &index) {
    std::vector<ZigZag> out;
    for (size_t c = 0; c < d.nodes.size(); c++) {
        if (d.nodes[c].kind != NodeKind::kCup) {
            continue;
        }
        Walk w[2] = {walk_up(d, index, d.nodes[c].edges[0]), walk_up(d, index, d.nodes[c].edges[1])};
        auto cap_of = [&](const Walk &x) -> std::optional<size_t> {
            if (x.end.has_value() && x.end->where == Port::Where::kNode &&
                d.nodes[x.end->node].kind == NodeKind::kCap) {
                return x.end->node;
            }
            return std::nullopt;
        };
        auto k0 = cap_of(w[0]), k1 = cap_of(w[1]);
        bool loop = k0.has_value() && k0 == k1;
        for (size_t s = 0; s < 2; s++) {
            auto k = s == 0 ? k0 : k1;
            // A loop is straightened from its right leg.
            if (!k.has_value() || (loop && s == 0)) {
                continue;
            }
            if (!loop && !straightenable(d, index, c, *k, w[s].end->slot)) {
                continue;
            }
            out.push_back({c, s, *k, w[s].dots, loop});
        }
    }
    return out;
}

std::optional<ZigZag> focus_of(const Diagram &d, const std::vector<ZigZag> &zs) {
    std::optional<ZigZag> best;
    for (const auto &z : zs) {
        if (!best.has_value() || std::tie(d.nodes[z.cup].id, z.slot) < std::tie(d.nodes[best->cup].id, best->slot)) {
            best = z;
        }
    }
    return best;
}

uint64_t pow3_saturating(size_t k) {
    uint64_t v = 1;
    for (size_t i = 0; i < k; i++) {
        if (v > std::numeric_limits<uint64_t>::max() / 3) {
            return std::numeric_limits<uint64_t>::max();
        }
        v *= 3;
    }
    return v;
}

size_t boxes_above(const Diagram &d, const std::map<std::string, EdgeEnds> &index, size_t start) {
    std::set<size_t> seen{start};
    std::vector<size_t> stack{start};
    size_t boxes = 0;
    while (!stack.empty()) {
        size_t n = stack.back();
        stack.pop_back();
        for (size_t s = 0; s < d.nodes[n].edges.size(); s++) {
            if (d.nodes[n].slot_consumes(s)) {
                continue;
            }
            const auto &c = index.at(d.nodes[n].edges[s]).consumer;
            if (c.has_value() && c->where == Port::Where::kNode && seen.insert(c->node).second) {
                boxes += d.nodes[c->node].kind == NodeKind::kGate2;
                stack.push_back(c->node);
            }
        }
    }
    return boxes;
}

std::string join(const std::vector<std::string> &xs, const char *sep) {
    std::string out;
    for (size_t k = 0; k < xs.size(); k++) {
        out += (k ? sep : "") + xs[k];
    }
    return out;
}

}  // namespace

std::string_view rule_name(Rule rule) {
    return kRuleNames[static_cast<size_t>(rule)];
}

Rule parse_rule(std::string_view name) {
    for (size_t k = 0; k < kRuleNames.size(); k++) {
        if (name == kRuleNames[k] || name == kRuleNames[k].substr(0, 2)) {
            return static_cast<Rule>(k);
        }
    }
    throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

Rewritten apply_rule(const Diagram &d, const RuleSite &site) {
    switch (site.rule) {
        case Rule::kSlideCup:
            return slide_cup(d, site);
        case Rule::kSlideCap:
            return slide_cap(d, site);
        case Rule::kYank:
            return yank(d, site);
        case Rule::kFuse:
            return fuse(d, site);
        case Rule::kPush:
            return push(d, site);
        case Rule::kCommute:
            return commute(d, site);
    }
    throw std::logic_error("unreachable");
}

std::string Measure::str() const {
    return "(" + std::to_string(cups_and_caps) + "," + std::to_string(dots) + "," + std::to_string(focus_dots) + "," +
           std::to_string(weight) + ")";
}

Measure measure(const Diagram &d) {
    auto index = d.edge_index();
    Measure m;
    m.cups_and_caps = d.count(NodeKind::kCup) + d.count(NodeKind::kCap);
    auto zs = find_zigzags(d, index);
    if (auto f = focus_of(d, zs)) {
        m.dots = d.count(NodeKind::kGate1);
        m.focus_dots = f->path.size();
    }
    for (size_t n = 0; n < d.nodes.size(); n++) {
        if (d.nodes[n].kind == NodeKind::kGate1) {
            uint64_t w = pow3_saturating(boxes_above(d, index, n));
            m.weight = m.weight > std::numeric_limits<uint64_t>::max() - w ? std::numeric_limits<uint64_t>::max()
                                                                           : m.weight + w;
        }
    }
    return m;
}

std::string TraceStep::str(size_t step) const {
    return std::to_string(step) + " " + std::string(rule_name(rule)) + " " + join(locus, ",") +
           " scalar*=" + format_complex(delta.coeff()) + "," + std::to_string(delta.sqrt2_exp());
}

NormalForm normalize(const Diagram &d) {
    require_valid(d);
    NormalForm nf;
    nf.diagram = d;
    size_t n = d.nodes.size();
    size_t budget = 10 * n * n;
    std::set<std::string> stuck_seen;

    auto apply = [&](Rule rule, std::vector<std::string> locus) {
        Rewritten r = apply_rule(nf.diagram, {rule, locus});
        nf.diagram = std::move(r.diagram);
        nf.trace.push_back({rule, std::move(locus), r.delta});
    };

    while (true) {
        const Diagram &cur = nf.diagram;
        auto index = cur.edge_index();
        auto order = cur.topological_order(true);

        // Fuse consecutive dots first.
        std::optional<std::pair<size_t, size_t>> fusable;
        for (size_t k : order) {
            if (cur.nodes[k].kind != NodeKind::kGate1) {
                continue;
            }
            const auto &c = index.at(cur.nodes[k].edges[1]).consumer;
            if (c.has_value() && c->where == Port::Where::kNode && cur.nodes[c->node].kind == NodeKind::kGate1) {
                fusable = std::make_pair(k, c->node);
                break;
            }
        }

        std::optional<RuleSite> next;
        if (fusable.has_value()) {
            next = RuleSite{Rule::kFuse, {cur.nodes[fusable->first].id, cur.nodes[fusable->second].id}};
        } else if (auto focus = focus_of(cur, find_zigzags(cur, index))) {
            const std::string &cup = cur.nodes[focus->cup].id;
            if (!focus->path.empty()) {
                next = RuleSite{Rule::kSlideCup, {cup, cur.nodes[focus->path.front()].id}};
            } else {
                next = RuleSite{Rule::kYank, {cup, cur.nodes[focus->cap].id}};
            }
        } else {
            for (size_t k : order) {
                if (cur.nodes[k].kind != NodeKind::kGate1) {
                    continue;
                }
                const auto &c = index.at(cur.nodes[k].edges[1]).consumer;
                if (!c.has_value() || c->where != Port::Where::kNode || cur.nodes[c->node].kind != NodeKind::kGate2) {
                    continue;
                }
                RuleSite site{Rule::kPush, {cur.nodes[k].id, cur.nodes[c->node].id}};
                try {
                    (void)apply_rule(cur, site);
                    next = site;
                    break;
                } catch (const RewriteError &) {
                    std::string marker = "dot " + site.locus[0] + " (" + cur.nodes[k].gate.str() + ") blocked at box " +
                                         site.locus[1];
                    if (stuck_seen.insert(marker).second) {
                        nf.stuck.push_back(marker);
                    }
                }
            }
        }
        if (!next.has_value()) {
            break;
        }
        if (nf.trace.size() >= budget) {
            nf.budget_exhausted = true;
            nf.stuck.push_back("step budget of " + std::to_string(budget) + " exhausted");
            break;
        }
        apply(next->rule, next->locus);
    }
    return nf;
}

Diagram replay(const Diagram &d, const RewriteTrace &trace) {
    Diagram cur = d;
    for (size_t k = 0; k < trace.size(); k++) {
        Rewritten r = apply_rule(cur, {trace[k].rule, trace[k].locus});
        if (!(r.delta == trace[k].delta)) {
            throw RewriteError("replay: step " + std::to_string(k + 1) + " produced a different scalar factor");
        }
        cur = std::move(r.diagram);
    }
    return cur;
}

std::vector<ResidualDot> residual_dots(const Diagram &d) {
    std::vector<ResidualDot> out;
    for (size_t k : d.topological_order(true)) {
        const Node &n = d.nodes[k];
        if (n.kind == NodeKind::kGate1) {
            out.push_back({n.id, n.edges[0], n.edges[1], n.gate.str()});
        }
    }
    return out;
}

namespace {

VerifyReport finish_report(std::string mode, NormalForm nf, const ComplexMatrix &expected, double tol) {
    VerifyReport r;
    r.mode = std::move(mode);
    ComplexMatrix got = evaluate(nf.diagram);
    if (got.rows() != expected.rows() || got.cols() != expected.cols()) {
        r.deviation = std::numeric_limits<double>::infinity();
    } else {
        r.deviation = got.max_abs_diff(expected);
    }
    r.success = r.deviation <= tol;
    r.scalar = nf.diagram.scalar;
    r.residual = residual_dots(nf.diagram);
    r.trace = std::move(nf.trace);
    r.stuck = std::move(nf.stuck);
    r.normal_form = std::move(nf.diagram);
    return r;
}

}  // namespace

VerifyReport verify(const Diagram &d, double tol) {
    return finish_report("self", normalize(d), evaluate(d), tol);
}

VerifyReport verify_equation(const Diagram &lhs, const Diagram &rhs, double tol) {
    return finish_report("equation", normalize(lhs), evaluate(rhs), tol);
}

VerifyReport verify_document(const std::vector<Diagram> &diagrams, double tol) {
    if (diagrams.size() == 1) {
        return verify(diagrams[0], tol);
    }
    if (diagrams.size() == 2) {
        return verify_equation(diagrams[0], diagrams[1], tol);
    }
    throw std::invalid_argument("verify expects one diagram or an equation of two, got " +
                                std::to_string(diagrams.size()));
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["status"] = success ? "pass" : "fail";
    j["mode"] = mode;
    j["deviation"] = deviation;
    j["scalar"] = {{"text", scalar.str()},
                   {"coeff_re", scalar.coeff().real()},
                   {"coeff_im", scalar.coeff().imag()},
                   {"sqrt2_exp", scalar.sqrt2_exp()}};
    auto dots = nlohmann::ordered_json::array();
    for (const auto &dot : residual) {
        dots.push_back({{"node", dot.node}, {"in", dot.in}, {"out", dot.out}, {"gate", dot.gate}});
    }
    j["residual_dots"] = dots;
    auto steps = nlohmann::ordered_json::array();
    for (size_t k = 0; k < trace.size(); k++) {
        steps.push_back(trace[k].str(k + 1));
    }
    j["trace"] = steps;
    j["stuck"] = stuck;
    return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
    char dev[64];
    std::snprintf(dev, sizeof(dev), "%.3e", deviation);
    std::string out = std::string("status: ") + (success ? "pass" : "fail") + "\n";
    out += "mode: " + mode + "\n";
    out += std::string("deviation: ") + dev + "\n";
    out += "scalar: " + scalar.str() + "\n";
    if (residual.empty()) {
        out += "residual dots: none\n";
    } else {
        out += "residual dots:\n";
        for (const auto &dot : residual) {
            out += "  " + dot.node + " [" + dot.gate + "] on " + dot.in + " -> " + dot.out + "\n";
        }
    }
    for (const auto &s : stuck) {
        out += "stuck: " + s + "\n";
    }
    out += "trace: " + std::to_string(trace.size()) + " steps\n";
    for (size_t k = 0; k < trace.size(); k++) {
        out += "  " + trace[k].str(k + 1) + "\n";
    }
    return out;
}

}  // namespace tlc
