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

#include "tlc/protocols.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "tlc/evaluate.h"
#include "tlc/gates.h"

namespace tlc {

// ------------------------------------------------------------------- specs

ProtocolSpec ProtocolSpec::chained(size_t k) {
    if (k < 1 || k > 6) {
        throw std::invalid_argument("chained teleportation length must be between 1 and 6, got " + std::to_string(k));
    }
    return {ProtocolKind::kChained, k, {}, {}};
}

ProtocolSpec ProtocolSpec::single(GateExpr u) {
    return {ProtocolKind::kSingle, 1, std::move(u), {}};
}

ProtocolSpec ProtocolSpec::cu(TwoQubitGate box) {
    return {ProtocolKind::kCu, 1, {}, std::move(box)};
}

ProtocolSpec ProtocolSpec::parse(std::string_view name, std::string_view gate, size_t length) {
    auto need_gate = [&](const char *what) {
        if (gate.empty()) {
            throw std::invalid_argument(std::string("protocol '") + std::string(name) + "' needs --gate " + what);
        }
    };
    if (name == "teleport") {
        return teleport();
    }
    if (name == "chained" || name == "chained_teleport") {
        return chained(length);
    }
    if (name == "single" || name == "gate_teleport_single") {
        need_gate("<expr>");
        return single(GateExpr::parse(gate));
    }
    if (name == "cu" || name == "gate_teleport_cu") {
        need_gate("cnot|cz|cu(<expr>)");
        return cu(TwoQubitGate::parse(gate));
    }
    if (name == "ghz") {
        return ghz();
    }
    if (name == "ghz_hadamard") {
        return ghz_hadamard();
    }
    if (name == "chi" || name == "chi_prepare") {
        return chi();
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) +
                                "' (expected teleport, chained, single, cu, ghz, ghz_hadamard or chi)");
}

std::string ProtocolSpec::name() const {
    switch (kind) {
        case ProtocolKind::kTeleport:
            return "teleport";
        case ProtocolKind::kChained:
            return "chained(" + std::to_string(length) + ")";
        case ProtocolKind::kSingle:
            return "single(" + u.str() + ")";
        case ProtocolKind::kCu:
            return "cu(" + box.str() + ")";
        case ProtocolKind::kGhz:
            return "ghz";
        case ProtocolKind::kGhzHadamard:
            return "ghz_hadamard";
        case ProtocolKind::kChi:
            return "chi";
    }
    return "?";
}

size_t ProtocolSpec::measurements() const {
    switch (kind) {
        case ProtocolKind::kChained:
            return length;
        case ProtocolKind::kCu:
            return 2;
        case ProtocolKind::kGhz:
        case ProtocolKind::kGhzHadamard:
            return 0;
        default:
            return 1;
    }
}

size_t ProtocolSpec::inputs() const {
    switch (kind) {
        case ProtocolKind::kCu:
            return 2;
        case ProtocolKind::kGhz:
        case ProtocolKind::kGhzHadamard:
        case ProtocolKind::kChi:
            return 0;
        default:
            return 1;
    }
}

namespace {

void check_outcomes(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes) {
    if (outcomes.size() != spec.measurements()) {
        throw std::invalid_argument(spec.name() + " needs " + std::to_string(spec.measurements()) +
                                    " outcome(s), got " + std::to_string(outcomes.size()));
    }
}

GateExpr outcome_gate(Outcome o) {
    return GateExpr::pauli(o.i, o.j);
}

// Bell measurement on (left, right): a cap, with M' on the right leg.
void add_measurement(Diagram &d, const std::string &id, const std::string &left, const std::string &right,
                     Outcome o) {
    GateExpr m = outcome_gate(o);
    if (m.is_identity()) {
        d.add(Node::cap(id, left, right));
        return;
    }
    std::string fed = right + "'";
    d.add(Node::gate1("d" + id, right, fed, m.dagger()));
    d.add(Node::cap(id, left, fed));
}

void add_dot(Diagram &d, const std::string &id, const std::string &in, const std::string &out, const GateExpr &g) {
    d.add(Node::gate1(id, in, out, g));
}

}  // namespace

Diagram build_diagram(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes) {
    check_outcomes(spec, outcomes);
    Diagram d;
    switch (spec.kind) {
        case ProtocolKind::kTeleport:
            d.name = "teleport";
            d.inputs = {"a"};
            d.outputs = {"r"};
            d.add(Node::cup("pair", "l", "r"));
            add_measurement(d, "meas", "a", "l", outcomes[0]);
            break;
        case ProtocolKind::kChained:
            d.name = "chained";
            d.inputs = {"w0"};
            for (size_t s = 1; s <= spec.length; s++) {
                std::string n = std::to_string(s);
                d.add(Node::cup("c" + n, "l" + n, "w" + n));
                add_measurement(d, "m" + n, "w" + std::to_string(s - 1), "l" + n, outcomes[s - 1]);
            }
            d.outputs = {"w" + std::to_string(spec.length)};
            break;
        case ProtocolKind::kSingle:
            d.name = "single";
            d.inputs = {"a"};
            d.outputs = {"r"};
            if (spec.u.is_identity()) {
                d.add(Node::cup("pair", "l", "r"));
            } else {
                d.add(Node::cup("pair", "l", "r0"));
                add_dot(d, "u", "r0", "r", spec.u);
            }
            add_measurement(d, "meas", "a", "l", outcomes[0]);
            break;
        case ProtocolKind::kCu:
            d.name = "cu";
            d.inputs = {"a", "b"};
            d.outputs = {"r1", "r2"};
            d.add(Node::cup("p1", "l1", "s1"));
            d.add(Node::cup("p2", "l2", "s2"));
            d.add(Node::gate2("box", "s1", "s2", "r1", "r2", spec.box));
            add_measurement(d, "m1", "a", "l1", outcomes[0]);
            add_measurement(d, "m2", "l2", "b", outcomes[1]);
            break;
        case ProtocolKind::kGhz:
            d.name = "ghz";
            d.outputs = {"a", "b", "c"};
            d.add(Node::cup("pair", "a", "b0"));
            d.add(Node::ket0("k", "c0"));
            d.add(Node::gate2("box", "b0", "c0", "b", "c", TwoQubitGate::cnot(0)));
            break;
        case ProtocolKind::kGhzHadamard:
            d.name = "ghz_hadamard";
            d.outputs = {"a", "b", "c"};
            d.add(Node::cup("pair", "a", "b0"));
            d.add(Node::ket0("k", "c0"));
            add_dot(d, "h", "c0", "c1", GateExpr::named(NamedGate::kH));
            d.add(Node::gate2("box", "b0", "c1", "b", "c", TwoQubitGate::cnot(1)));
            break;
        case ProtocolKind::kChi:
            d.name = "chi";
            d.outputs = {"w1", "w2", "w5", "w6"};
            d.add(Node::cup("p12", "w1", "w2a"));
            d.add(Node::ket0("k3", "k3"));
            add_dot(d, "h3", "k3", "w3a", GateExpr::named(NamedGate::kH));
            d.add(Node::gate2("x32", "w2a", "w3a", "w2", "w3", TwoQubitGate::cnot(1)));
            d.add(Node::cup("p45", "w4", "w5a"));
            d.add(Node::ket0("k6", "k6"));
            d.add(Node::gate2("x56", "w5a", "k6", "w5", "w6", TwoQubitGate::cnot(0)));
            add_measurement(d, "m34", "w3", "w4", outcomes[0]);
            break;
    }
    return d;
}

// -------------------------------------------------------------- circuits

namespace {

QuantumState with_bell_pair(const QuantumState &s, size_t at) {
    QuantumState out = s.tensor(QuantumState::zero(2));
    out = out.apply_gate(gates::H(), {at});
    return out.apply_gate(gates::CNOT(), {at, at + 1});
}

QuantumState ghz_circuit() {
    QuantumState s = QuantumState::zero(3);
    s = s.apply_gate(gates::H(), {0});
    s = s.apply_gate(gates::CNOT(), {0, 1});
    return s.apply_gate(gates::CNOT(), {1, 2});
}

QuantumState ghz_hadamard_circuit() {
    QuantumState s = ghz_circuit();
    for (size_t q = 0; q < 3; q++) {
        s = s.apply_gate(gates::H(), {q});
    }
    return s;
}

void check_inputs(const std::vector<ComplexVector> &inputs, size_t count) {
    if (inputs.size() != count) {
        throw std::invalid_argument("expected " + std::to_string(count) + " input state(s), got " +
                                    std::to_string(inputs.size()));
    }
}

QuantumState input_state(const std::vector<ComplexVector> &inputs, size_t count) {
    check_inputs(inputs, count);
    QuantumState s(inputs[0]);
    for (size_t k = 1; k < inputs.size(); k++) {
        s = s.tensor(QuantumState(inputs[k]));
    }
    return s;
}

}  // namespace

CircuitRun simulate_circuit(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes,
                            const std::vector<ComplexVector> &inputs) {
    check_outcomes(spec, outcomes);
    CircuitRun run;
    switch (spec.kind) {
        case ProtocolKind::kTeleport:
        case ProtocolKind::kChained:
        case ProtocolKind::kSingle: {
            QuantumState s = input_state(inputs, 1);
            run.probability = 1;
            for (size_t k = 0; k < outcomes.size(); k++) {
                QuantumState t = with_bell_pair(s, 1);
                if (spec.kind == ProtocolKind::kSingle && !spec.u.is_identity()) {
                    t = t.apply_gate(spec.u.matrix(), {2});
                }
                MeasurementRecord r = measure_bell_postselect(t, 0, 1, outcomes[k]);
                run.probability *= r.probability;
                s = QuantumState(r.post_state);
            }
            run.state = s.amplitudes();
            break;
        }
        case ProtocolKind::kCu: {
            // Qubits: a, b, l1, s1, l2, s2.
            QuantumState s = with_bell_pair(with_bell_pair(input_state(inputs, 2), 2), 4);
            s = s.apply_gate(spec.box.matrix(), {3, 5});
            MeasurementRecord first = measure_bell_postselect(s, 0, 2, outcomes[0]);
            // Now b, s1, l2, s2; the second pair is read as (l2, b).
            MeasurementRecord second = measure_bell_postselect(QuantumState(first.post_state), 2, 0, outcomes[1]);
            run.probability = first.probability * second.probability;
            run.state = second.post_state;
            break;
        }
        case ProtocolKind::kGhz:
            check_inputs(inputs, 0);
            run.state = ghz_circuit().amplitudes();
            run.probability = 1;
            break;
        case ProtocolKind::kGhzHadamard:
            check_inputs(inputs, 0);
            run.state = ghz_hadamard_circuit().amplitudes();
            run.probability = 1;
            break;
        case ProtocolKind::kChi: {
            check_inputs(inputs, 0);
            QuantumState s = ghz_hadamard_circuit().tensor(ghz_circuit());
            MeasurementRecord r = measure_bell_postselect(s, 2, 3, outcomes[0]);
            run.probability = r.probability;
            run.state = r.post_state;
            break;
        }
    }
    return run;
}

namespace {

std::vector<std::vector<Outcome>> all_assignments(size_t m) {
    std::vector<std::vector<Outcome>> out;
    size_t total = size_t{1} << (2 * m);
    for (size_t code = 0; code < total; code++) {
        std::vector<Outcome> o;
        for (size_t k = 0; k < m; k++) {
            o.push_back(Outcome::from_index(static_cast<unsigned>((code >> (2 * (m - 1 - k))) & 3)));
        }
        out.push_back(o);
    }
    return out;
}

}  // namespace

std::vector<Outcome> sample_outcomes(const ProtocolSpec &spec, const std::vector<ComplexVector> &inputs,
                                     SplitMix64 &rng) {
    auto assignments = all_assignments(spec.measurements());
    std::vector<double> prob;
    for (const auto &a : assignments) {
        try {
            prob.push_back(simulate_circuit(spec, a, inputs).probability);
        } catch (const std::domain_error &) {
            prob.push_back(0);
        }
    }
    double u = rng.uniform();
    double acc = 0;
    size_t last = 0;
    for (size_t k = 0; k < assignments.size(); k++) {
        if (prob[k] == 0) {
            continue;
        }
        last = k;
        acc += prob[k];
        if (u < acc) {
            return assignments[k];
        }
    }
    return assignments[last];
}

// ----------------------------------------------------- targets, corrections

QuantumState chi_state() {
    QuantumState pairs(tensor(gates::epr(), gates::epr()));
    return pairs.apply_gate(gates::CNOT(), {2, 1});
}

ComplexVector protocol_target(const ProtocolSpec &spec, const std::vector<ComplexVector> &inputs) {
    switch (spec.kind) {
        case ProtocolKind::kTeleport:
        case ProtocolKind::kChained:
            return input_state(inputs, 1).amplitudes();
        case ProtocolKind::kSingle:
            return spec.u.matrix() * input_state(inputs, 1).amplitudes();
        case ProtocolKind::kCu:
            return spec.box.matrix() * input_state(inputs, 2).amplitudes();
        case ProtocolKind::kGhz:
            return gates::ghz();
        case ProtocolKind::kGhzHadamard: {
            ComplexMatrix h = gates::H();
            std::array<ComplexMatrix, 3> hs{h, h, h};
            return tensor_all(hs) * gates::ghz();
        }
        case ProtocolKind::kChi:
            return chi_state().amplitudes();
    }
    throw std::logic_error("unreachable");
}

Correction protocol_correction(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes) {
    check_outcomes(spec, outcomes);
    switch (spec.kind) {
        case ProtocolKind::kTeleport: {
            Outcome o = outcomes[0];
            GateExpr c = GateExpr::pauli(false, o.j) * GateExpr::pauli(o.i, false);
            return {c.matrix(), c.str()};
        }
        case ProtocolKind::kChained: {
            GateExpr acc;
            for (const auto &o : outcomes) {
                acc = outcome_gate(o) * acc;
            }
            GateExpr c = acc.dagger();
            return {c.matrix(), c.str()};
        }
        case ProtocolKind::kSingle: {
            GateExpr m = outcome_gate(outcomes[0]);
            GateExpr c = spec.u * m.transpose() * spec.u.dagger();
            return {c.matrix(), c.str()};
        }
        case ProtocolKind::kCu: {
            Outcome first = outcomes[0], second = outcomes[1];
            if (spec.box.kind != TwoQubitGate::Kind::kCu) {
                ControlledGate g = spec.box.kind == TwoQubitGate::Kind::kCz ? ControlledGate::kCz : ControlledGate::kCnot;
                if (spec.box.kind == TwoQubitGate::Kind::kCnot && spec.box.control_slot != 0) {
                    throw std::invalid_argument("gate teleportation supports cnot with control on the first qubit");
                }
                const CorrectionEntry &e = correction_table(g)[(first.index() << 2) | second.index()];
                PauliString q = e.q.dagger(), p = e.p.dagger();
                return {tensor(q.to_matrix(), p.to_matrix()), q.str() + "⊗" + p.str()};
            }
            ComplexMatrix box = spec.box.matrix();
            ComplexMatrix m_star = conjugate(outcome_gate(first).matrix());
            ComplexMatrix n_dag = dagger(outcome_gate(second).matrix());
            ComplexMatrix frame = box * tensor(m_star, n_dag) * dagger(box);
            return {dagger(frame), "(CU.(" + outcome_gate(first).conjugate().str() + "⊗" +
                                       outcome_gate(second).dagger().str() + ").CU')'"};
        }
        case ProtocolKind::kGhz:
        case ProtocolKind::kGhzHadamard:
            return {ComplexMatrix::identity(8), "I"};
        case ProtocolKind::kChi: {
            PauliString c = chi_correction(outcomes[0]);
            return {c.to_matrix(), c.str()};
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<GateExpr> output_frame(const Diagram &d) {
    auto index = d.edge_index();
    std::vector<GateExpr> out;
    for (const auto &e : d.outputs) {
        GateExpr acc;
        std::string edge = e;
        while (true) {
            const auto &producer = index.at(edge).producer;
            if (!producer.has_value() || producer->where != Port::Where::kNode) {
                break;
            }
            const Node &n = d.nodes[producer->node];
            if (n.kind != NodeKind::kGate1) {
                break;
            }
            acc = acc * n.gate;
            edge = n.edges[0];
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<PauliString> chi_correction_candidates(Outcome outcome) {
    ComplexVector post = simulate_circuit(ProtocolSpec::chi(), {outcome}, {}).state;
    ComplexVector chi = chi_state().amplitudes();
    std::vector<PauliString> out;
    for (size_t code = 0; code < 256; code++) {
        PauliString p(4);
        for (size_t q = 0; q < 4; q++) {
            p.set(q, (code >> (2 * q)) & 1, (code >> (2 * q + 1)) & 1);
        }
        if (equal_upto_phase(p.to_matrix() * post, chi).has_value()) {
            out.push_back(p);
        }
    }
    return out;
}

PauliString chi_correction(Outcome outcome) {
    NormalForm nf = normalize(build_diagram(ProtocolSpec::chi(), {outcome}));
    if (nf.budget_exhausted) {
        throw std::logic_error("chi diagram did not normalize within the step budget");
    }
    std::optional<PauliString> frame;
    for (const auto &g : output_frame(nf.diagram)) {
        auto match = match_pauli(g.matrix());
        if (!match.has_value()) {
            throw std::logic_error("chi residual dot " + g.str() + " is not a Pauli");
        }
        frame = frame.has_value() ? frame->tensor(match->pauli) : match->pauli;
    }
    PauliString correction = frame->dagger();
    for (const auto &c : chi_correction_candidates(outcome)) {
        if (c == correction.unsigned_part()) {
            return correction;
        }
    }
    throw std::logic_error("chi correction " + correction.str() + " for outcome " + outcome.str() +
                           " is not confirmed by the brute-force search");
}

// ------------------------------------------------------------- identities

std::vector<IdentityCheck> ghz_identities_check() {
    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, double deviation) {
        out.push_back({std::move(name), deviation, deviation <= 1e-12});
    };
    ComplexMatrix hh = tensor(gates::H(), gates::H());
    add("hadamard_sandwich", (hh * gates::CNOT() * hh).max_abs_diff(gates::CNOT_reversed()));

    ComplexVector diagram_state = evaluate_on(build_diagram(ProtocolSpec::ghz_hadamard(), {}), ComplexVector{1});
    add("ghz_hadamard_diagram", diagram_state.max_abs_diff(protocol_target(ProtocolSpec::ghz_hadamard(), {})));
    ComplexVector ghz_state = evaluate_on(build_diagram(ProtocolSpec::ghz(), {}), ComplexVector{1});
    add("ghz_diagram", ghz_state.max_abs_diff(gates::ghz()));

    std::array<size_t, 2> t52{4, 1}, t56{4, 5};
    ComplexMatrix a = embed(gates::CNOT(), t52, 6), b = embed(gates::CNOT(), t56, 6);
    add("cnot52_cnot56_commute", (a * b).max_abs_diff(b * a));

    for (unsigned k = 0; k < 4; k++) {
        Outcome o = Outcome::from_index(k);
        ComplexMatrix m = gates::pauli_xz(o.i, o.j);
        ComplexMatrix lhs = gates::CNOT() * tensor(m, gates::I()) * gates::CNOT();
        ComplexMatrix rhs = tensor(m, gates::pauli_xz(o.i, false));
        add("cnot_conjugation_" + o.str(), lhs.max_abs_diff(rhs));
    }
    return out;
}

// ----------------------------------------------------------------- running

ComplexVector random_state(size_t num_qubits, SplitMix64 &rng) {
    auto gaussian = [&] {
        double u1 = 1 - rng.uniform(), u2 = rng.uniform();
        return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
    };
    ComplexVector v(size_t{1} << num_qubits);
    for (size_t k = 0; k < v.dim(); k++) {
        double re = gaussian();
        v[k] = Complex{re, gaussian()};
    }
    return v.normalized();
}

OutcomePolicy OutcomePolicy::parse(std::string_view text, size_t shots) {
    OutcomePolicy p;
    p.shots = shots;
    if (text == "all") {
        return p;
    }
    if (text == "sample") {
        p.mode = Mode::kSampled;
        return p;
    }
    if (text.empty() || text.size() % 2 != 0 || text.find_first_not_of("01") != std::string_view::npos) {
        throw std::invalid_argument("--outcomes must be all, sample, or pairs of bits such as 10 or 0111, got '" +
                                    std::string(text) + "'");
    }
    p.mode = Mode::kFixed;
    for (size_t k = 0; k < text.size(); k += 2) {
        p.fixed.push_back({text[k] == '1', text[k + 1] == '1'});
    }
    return p;
}

namespace {

std::string join_outcomes(const std::vector<Outcome> &outcomes) {
    std::string s;
    for (const auto &o : outcomes) {
        s += o.str();
    }
    return s.empty() ? "-" : s;
}

BranchRecord run_branch(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes,
                        const std::vector<std::vector<ComplexVector>> &input_sets, double tol) {
    BranchRecord r;
    r.outcomes = outcomes;
    Diagram d = build_diagram(spec, outcomes);
    NormalForm nf = normalize(d);
    r.scalar = nf.diagram.scalar;
    for (const auto &step : nf.trace) {
        if (step.rule == Rule::kYank) {
            r.yank_scalar *= step.delta;
        }
    }
    std::string residual;
    for (const auto &g : output_frame(nf.diagram)) {
        residual += (residual.empty() ? "" : " ⊗ ") + g.str();
    }
    r.residual = residual;
    r.stuck = nf.stuck;
    r.soundness = evaluate(nf.diagram).max_abs_diff(evaluate(d));

    Correction c = protocol_correction(spec, outcomes);
    r.correction = c.text;
    if (spec.kind == ProtocolKind::kSingle) {
        r.correction_level = std::string(hierarchy_name(classify_hierarchy(c.matrix, 1)));
    }

    r.fidelity = 1;
    for (size_t t = 0; t < input_sets.size(); t++) {
        const auto &inputs = input_sets[t];
        CircuitRun run = simulate_circuit(spec, outcomes, inputs);
        ComplexVector in = ComplexVector{1};
        for (const auto &v : inputs) {
            in = tensor(in, v);
        }
        ComplexVector from_diagram = evaluate_on(d, in);
        ComplexVector from_circuit = run.state * Complex{std::sqrt(run.probability), 0};
        r.agreement = std::max(r.agreement, from_diagram.max_abs_diff(from_circuit));
        ComplexVector corrected = c.matrix * run.state;
        r.fidelity = std::min(r.fidelity, fidelity(protocol_target(spec, inputs), corrected));
        if (t == 0) {
            r.probability = run.probability;
        }
    }
    r.pass = r.fidelity >= 1 - tol && r.agreement <= tol && r.soundness <= tol && !nf.budget_exhausted;
    return r;
}

std::vector<ComplexVector> draw_inputs(const ProtocolSpec &spec, SplitMix64 &rng) {
    std::vector<ComplexVector> inputs;
    for (size_t k = 0; k < spec.inputs(); k++) {
        inputs.push_back(random_state(1, rng));
    }
    return inputs;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

ProtocolReport run_protocol(const ProtocolSpec &spec, const OutcomePolicy &policy, SplitMix64 &rng, size_t trials,
                            double tol) {
    ProtocolReport report;
    report.protocol = spec.name();
    report.trials = trials;
    auto input_sets = [&] {
        std::vector<std::vector<ComplexVector>> sets;
        for (size_t t = 0; t < trials; t++) {
            sets.push_back(draw_inputs(spec, rng));
        }
        return sets;
    };
    switch (policy.mode) {
        case OutcomePolicy::Mode::kAll:
            for (const auto &o : all_assignments(spec.measurements())) {
                report.branches.push_back(run_branch(spec, o, input_sets(), tol));
            }
            break;
        case OutcomePolicy::Mode::kFixed:
            check_outcomes(spec, policy.fixed);
            report.branches.push_back(run_branch(spec, policy.fixed, input_sets(), tol));
            break;
        case OutcomePolicy::Mode::kSampled:
            report.trials = 1;
            for (size_t s = 0; s < policy.shots; s++) {
                auto inputs = draw_inputs(spec, rng);
                auto o = sample_outcomes(spec, inputs, rng);
                report.branches.push_back(run_branch(spec, o, {inputs}, tol));
            }
            break;
    }
    report.pass = !report.branches.empty();
    for (const auto &b : report.branches) {
        report.pass = report.pass && b.pass;
    }
    return report;
}

std::string ProtocolReport::to_text() const {
    std::string out = "protocol " + protocol + " trials=" + std::to_string(trials) + "\n";
    for (const auto &b : branches) {
        out += "outcomes=" + join_outcomes(b.outcomes) + " probability=" + fmt(b.probability) +
               " scalar=" + b.scalar.str() + " yank=" + b.yank_scalar.str() + " residual=" + b.residual +
               " correction=" + b.correction;
        if (!b.correction_level.empty()) {
            out += " level=" + b.correction_level;
        }
        if (!b.stuck.empty()) {
            out += " stuck=" + std::to_string(b.stuck.size());
        }
        out += " fidelity=" + fmt(b.fidelity) + " agreement=" + fmt(b.agreement) + " " + (b.pass ? "pass" : "FAIL") +
               "\n";
    }
    out += std::string("result ") + (pass ? "pass" : "FAIL") + "\n";
    return out;
}

std::string ProtocolReport::to_json() const {
    nlohmann::ordered_json j;
    j["protocol"] = protocol;
    j["trials"] = trials;
    j["pass"] = pass;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &b : branches) {
        nlohmann::ordered_json row;
        row["outcomes"] = join_outcomes(b.outcomes);
        row["probability"] = b.probability;
        row["scalar"] = b.scalar.str();
        row["yank_scalar"] = b.yank_scalar.str();
        row["residual"] = b.residual;
        row["stuck"] = b.stuck;
        row["correction"] = b.correction;
        if (!b.correction_level.empty()) {
            row["correction_level"] = b.correction_level;
        }
        row["fidelity"] = b.fidelity;
        row["agreement"] = b.agreement;
        row["soundness"] = b.soundness;
        row["pass"] = b.pass;
        rows.push_back(row);
    }
    j["branches"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace tlc
