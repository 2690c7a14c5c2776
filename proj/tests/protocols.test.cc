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

#include "gtest/gtest.h"

#include "tlc/diagram_text.h"
#include "tlc/evaluate.h"
#include "tlc/gates.h"

using namespace tlc;

namespace {

std::vector<ProtocolSpec> corpus_specs() {
    std::vector<ProtocolSpec> specs = {ProtocolSpec::teleport(), ProtocolSpec::ghz(), ProtocolSpec::ghz_hadamard(),
                                       ProtocolSpec::chi()};
    for (size_t k = 1; k <= 3; k++) {
        specs.push_back(ProtocolSpec::chained(k));
    }
    for (const char *u : {"I", "X", "Z", "H", "S", "T"}) {
        specs.push_back(ProtocolSpec::single(GateExpr::parse(u)));
    }
    for (const char *g : {"cnot", "cz", "cu(S)"}) {
        specs.push_back(ProtocolSpec::cu(TwoQubitGate::parse(g)));
    }
    return specs;
}

std::vector<std::vector<Outcome>> assignments(size_t m) {
    std::vector<std::vector<Outcome>> out;
    for (size_t code = 0; code < (size_t{1} << (2 * m)); code++) {
        std::vector<Outcome> o;
        for (size_t k = 0; k < m; k++) {
            o.push_back(Outcome::from_index(static_cast<unsigned>((code >> (2 * k)) & 3)));
        }
        out.push_back(o);
    }
    return out;
}

}  // namespace

TEST(protocols, spec_parsing) {
    EXPECT_EQ(ProtocolSpec::parse("chained_teleport", "", 3).length, 3u);
    EXPECT_EQ(ProtocolSpec::parse("cu", "cz").box, TwoQubitGate::cz());
    EXPECT_EQ(ProtocolSpec::parse("gate_teleport_single", "T").u.str(), "T");
    EXPECT_EQ(ProtocolSpec::parse("chi_prepare").kind, ProtocolKind::kChi);
    EXPECT_THROW(ProtocolSpec::parse("single"), std::invalid_argument);
    EXPECT_THROW(ProtocolSpec::parse("swap"), std::invalid_argument);
    EXPECT_THROW(ProtocolSpec::chained(7), std::invalid_argument);
    EXPECT_THROW(ProtocolSpec::chained(0), std::invalid_argument);
    EXPECT_THROW(build_diagram(ProtocolSpec::teleport(), {}), std::invalid_argument);
}

TEST(protocols, teleport_diagram_is_half_identity) {
    Diagram d = build_diagram(ProtocolSpec::teleport(), {{false, false}});
    EXPECT_EQ(d.count(NodeKind::kGate1), 0u);
    EXPECT_LE(evaluate(d).max_abs_diff(ComplexMatrix::identity(2) * Complex{0.5, 0}), 1e-15);
    Diagram chain = build_diagram(ProtocolSpec::chained(2), {{false, false}, {false, false}});
    EXPECT_LE(evaluate(chain).max_abs_diff(ComplexMatrix::identity(2) * Complex{0.25, 0}), 1e-15);
}

TEST(protocols, chained_scalars) {
    for (size_t k = 1; k <= 6; k++) {
        NormalForm nf = normalize(build_diagram(ProtocolSpec::chained(k), std::vector<Outcome>(k)));
        EXPECT_EQ(nf.diagram.scalar, Scalar::power_of_two(-static_cast<int>(k)));
        EXPECT_TRUE(nf.diagram.nodes.empty());
    }
}

TEST(protocols, round_trip_corpus) {
    for (const auto &spec : corpus_specs()) {
        for (const auto &o : assignments(spec.measurements())) {
            Diagram d = build_diagram(spec, o);
            ASSERT_TRUE(validate(d).empty()) << spec.name();
            Diagram back = parse_diagram(serialize(d));
            EXPECT_EQ(canonical_form(back), canonical_form(d)) << spec.name();
            EXPECT_EQ(back.scalar, d.scalar);
        }
    }
}

TEST(protocols, diagram_matches_circuit) {
    SplitMix64 rng(17);
    for (const auto &spec : corpus_specs()) {
        for (const auto &o : assignments(spec.measurements())) {
            std::vector<ComplexVector> inputs;
            ComplexVector in{1};
            for (size_t k = 0; k < spec.inputs(); k++) {
                inputs.push_back(random_state(1, rng));
                in = tensor(in, inputs.back());
            }
            CircuitRun run = simulate_circuit(spec, o, inputs);
            ComplexVector from_diagram = evaluate_on(build_diagram(spec, o), in);
            EXPECT_LE(from_diagram.max_abs_diff(run.state * Complex{std::sqrt(run.probability), 0}), 1e-10)
                << spec.name();
        }
    }
}

TEST(protocols, corrections_complete) {
    SplitMix64 rng(23);
    std::vector<ProtocolSpec> specs = {ProtocolSpec::teleport(), ProtocolSpec::cu(TwoQubitGate::cnot()),
                                       ProtocolSpec::cu(TwoQubitGate::cz()), ProtocolSpec::chi()};
    for (const char *u : {"I", "X", "Z", "H", "S", "T"}) {
        specs.push_back(ProtocolSpec::single(GateExpr::parse(u)));
    }
    for (const auto &spec : specs) {
        ProtocolReport r = run_protocol(spec, OutcomePolicy{}, rng, 20);
        EXPECT_TRUE(r.pass) << r.to_text();
        EXPECT_EQ(r.branches.size(), size_t{1} << (2 * spec.measurements()));
        for (const auto &b : r.branches) {
            EXPECT_GE(b.fidelity, 1 - 1e-10);
        }
    }
}

TEST(protocols, cu_residual_matches_correction_table) {
    for (ControlledGate g : {ControlledGate::kCnot, ControlledGate::kCz}) {
        TwoQubitGate box = g == ControlledGate::kCnot ? TwoQubitGate::cnot() : TwoQubitGate::cz();
        auto table = correction_table(g);
        for (const auto &e : table) {
            NormalForm nf = normalize(build_diagram(ProtocolSpec::cu(box), {e.first, e.second}));
            EXPECT_TRUE(nf.stuck.empty());
            Scalar yank;
            for (const auto &s : nf.trace) {
                if (s.rule == Rule::kYank) {
                    yank *= s.delta;
                }
            }
            EXPECT_EQ(yank, Scalar::power_of_two(-2));
            auto frame = output_frame(nf.diagram);
            ASSERT_EQ(frame.size(), 2u);
            ComplexMatrix got = tensor(frame[0].matrix(), frame[1].matrix()) * nf.diagram.scalar.value();
            ComplexMatrix want = tensor(e.q.to_matrix(), e.p.to_matrix()) * (e.phase * 0.25);
            EXPECT_LE(got.max_abs_diff(want), 1e-12) << e.first.str() << e.second.str();
        }
    }
}

TEST(protocols, single_gate_t_outcome_10) {
    Correction c = protocol_correction(ProtocolSpec::single(GateExpr::parse("T")), {{true, false}});
    EXPECT_EQ(c.text, "T.X.T'");
    EXPECT_EQ(classify_hierarchy(c.matrix, 1), HierarchyLevel::kC2);
    EXPECT_EQ(classify_hierarchy(gates::T(), 1), HierarchyLevel::kC3);
}

TEST(protocols, hierarchy_descent) {
    for (const char *name : {"X", "Z", "H", "S", "T"}) {
        GateExpr u = GateExpr::parse(name);
        HierarchyLevel level = classify_hierarchy(u.matrix(), 1);
        for (unsigned k = 0; k < 4; k++) {
            Outcome o = Outcome::from_index(k);
            Correction c = protocol_correction(ProtocolSpec::single(u), {o});
            HierarchyLevel got = classify_hierarchy(c.matrix, 1);
            if (level <= HierarchyLevel::kC2) {
                EXPECT_EQ(got, HierarchyLevel::kC1) << name << " " << o.str();
            } else {
                EXPECT_LE(static_cast<int>(got), static_cast<int>(level) - 1) << name << " " << o.str();
            }
        }
    }
}

TEST(protocols, chi_state_pattern) {
    ComplexVector chi = chi_state().amplitudes();
    for (size_t k = 0; k < 16; k++) {
        bool support = k == 0b0000 || k == 0b0111 || k == 0b1100 || k == 0b1011;
        EXPECT_NEAR(std::abs(chi[k] - Complex{support ? 0.5 : 0, 0}), 0, 1e-15) << k;
    }
    Diagram d = parse_diagram(
        "diagram chi\noutput a b2 c2 d\nnode p cup a b\nnode q cup c d\nnode x gate2 b c b2 c2 gate=cnot(1)\n");
    EXPECT_LE(evaluate_on(d, ComplexVector{1}).max_abs_diff(chi), 1e-15);
    // Each single-qubit marginal is I/2.
    for (size_t q = 0; q < 4; q++) {
        Complex rho[2][2] = {};
        for (size_t a = 0; a < 16; a++) {
            for (size_t b = 0; b < 16; b++) {
                size_t mask = size_t{1} << (3 - q);
                if ((a & ~mask) == (b & ~mask)) {
                    rho[(a & mask) != 0][(b & mask) != 0] += chi[a] * std::conj(chi[b]);
                }
            }
        }
        EXPECT_NEAR(std::abs(rho[0][0] - 0.5), 0, 1e-15);
        EXPECT_NEAR(std::abs(rho[1][1] - 0.5), 0, 1e-15);
        EXPECT_NEAR(std::abs(rho[0][1]), 0, 1e-15);
    }
}

TEST(protocols, chi_corrections) {
    const char *expected[] = {"I⊗I⊗I⊗I", "I⊗I⊗Z⊗I", "I⊗I⊗X⊗X", "I⊗I⊗XZ⊗X"};
    for (unsigned k = 0; k < 4; k++) {
        Outcome o = Outcome::from_index(k);
        auto candidates = chi_correction_candidates(o);
        EXPECT_EQ(candidates.size(), 16u);
        PauliString c = chi_correction(o);
        EXPECT_EQ(c.unsigned_part().str(), expected[k]);
        // Figure prediction: X^i on wires 5 and 6, Z^j on wire 5.
        EXPECT_EQ(c.x(2), o.i);
        EXPECT_EQ(c.x(3), o.i);
        EXPECT_EQ(c.z(2), o.j);
        EXPECT_FALSE(c.x(0) || c.z(0) || c.x(1) || c.z(1) || c.z(3));
    }
    NormalForm nf = normalize(build_diagram(ProtocolSpec::chi(), {{false, false}}));
    EXPECT_EQ(nf.diagram.scalar, Scalar::half());
    EXPECT_EQ(nf.diagram.count(NodeKind::kCup), 1u);
    EXPECT_EQ(nf.diagram.count(NodeKind::kCap), 0u);
}

TEST(protocols, ghz_identities) {
    auto checks = ghz_identities_check();
    EXPECT_EQ(checks.size(), 8u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.exact) << c.name << " " << c.deviation;
    }
}

TEST(protocols, report_formats) {
    SplitMix64 rng(1);
    ProtocolReport r = run_protocol(ProtocolSpec::teleport(), OutcomePolicy::parse("10"), rng);
    ASSERT_EQ(r.branches.size(), 1u);
    std::string text = r.to_text();
    EXPECT_EQ(text.substr(0, text.find('\n')), "protocol teleport trials=1");
    EXPECT_NE(text.find("outcomes=10 probability=0.25 scalar=1/2 yank=1/2 residual=X correction=X fidelity=1"),
              std::string::npos);
    EXPECT_NE(text.find("result pass"), std::string::npos);
    EXPECT_NE(r.to_json().find("\"protocol\": \"teleport\""), std::string::npos);

    SplitMix64 a(9), b(9);
    auto sampled = OutcomePolicy::parse("sample", 12);
    EXPECT_EQ(run_protocol(ProtocolSpec::chained(2), sampled, a).to_json(),
              run_protocol(ProtocolSpec::chained(2), sampled, b).to_json());

    EXPECT_THROW(OutcomePolicy::parse("1"), std::invalid_argument);
    EXPECT_THROW(OutcomePolicy::parse("12"), std::invalid_argument);
    EXPECT_THROW(run_protocol(ProtocolSpec::cu(TwoQubitGate::cz()), OutcomePolicy::parse("10"), rng),
                 std::invalid_argument);
}
