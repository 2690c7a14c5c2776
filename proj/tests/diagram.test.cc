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

#include <random>

#include "gtest/gtest.h"

#include "test_util.h"
#include "tlc/diagram_text.h"
#include "tlc/evaluate.h"
#include "tlc/gates.h"

using namespace tlc;

namespace {

Diagram bare_cup() {
    Diagram d;
    d.name = "cup";
    d.outputs = {"a", "b"};
    d.add(Node::cup("n1", "a", "b"));
    return d;
}

Diagram cup_with_dot(const GateExpr &m, bool on_right) {
    Diagram d;
    d.outputs = {"a2", "b2"};
    d.add(Node::cup("c", "a", "b"));
    if (on_right) {
        d.add(Node::gate1("g", "b", "b2", m));
        d.add(Node::gate1("id", "a", "a2", GateExpr()));
    } else {
        d.add(Node::gate1("g", "a", "a2", m));
        d.add(Node::gate1("id", "b", "b2", GateExpr()));
    }
    return d;
}

Diagram cap_with_dot(const GateExpr &m, bool on_right) {
    Diagram d;
    d.inputs = {"a", "b"};
    if (on_right) {
        d.add(Node::gate1("g", "b", "b2", m));
        d.add(Node::cap("k", "a", "b2"));
    } else {
        d.add(Node::gate1("g", "a", "a2", m));
        d.add(Node::cap("k", "a2", "b"));
    }
    return d;
}

// Input wire teleported through two Bell pairs.
Diagram chain_of_two() {
    Diagram d;
    d.name = "chain";
    d.inputs = {"a"};
    d.outputs = {"e"};
    d.add(Node::cup("c1", "b", "c"));
    d.add(Node::cap("m1", "a", "b"));
    d.add(Node::cup("c2", "d", "e"));
    d.add(Node::cap("m2", "c", "d"));
    return d;
}

bool has_kind(const std::vector<Violation> &vs, std::string_view kind) {
    for (const auto &v : vs) {
        if (v.kind == kind) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST(diagram, validate_examples) {
    EXPECT_TRUE(validate(bare_cup()).empty());

    Diagram dangling;
    dangling.outputs = {"a"};
    dangling.add(Node::cup("n1", "a", "b"));
    auto vs = validate(dangling);
    ASSERT_FALSE(vs.empty());
    EXPECT_TRUE(has_kind(vs, "dangling port"));
    EXPECT_EQ(vs[0].where, "b");

    Diagram closed;
    closed.add(Node::cup("c", "a", "b"));
    closed.add(Node::cap("k", "a", "b"));
    EXPECT_TRUE(validate(closed).empty());
    EXPECT_LE(evaluate(closed).max_abs_diff(ComplexMatrix::identity(1)), 1e-15);
}

TEST(diagram, validate_reports_every_problem) {
    Diagram d;
    d.inputs = {"x", "x"};
    d.outputs = {"y"};
    d.add(Node::gate1("g", "x", "y", GateExpr::parse("H")));
    d.add(Node::gate1("g", "z", "w", GateExpr::literal(ComplexMatrix(2, 2, {1, 1, 0, 1}))));
    auto vs = validate(d);
    EXPECT_TRUE(has_kind(vs, "duplicate boundary"));
    EXPECT_TRUE(has_kind(vs, "duplicate node"));
    EXPECT_TRUE(has_kind(vs, "non-unitary"));
    EXPECT_TRUE(has_kind(vs, "dangling port"));
    EXPECT_TRUE(has_kind(vs, "edge reuse"));
    EXPECT_THROW(require_valid(d), std::invalid_argument);
}

TEST(diagram, validate_detects_cycles) {
    Diagram d;
    d.add(Node::gate1("g1", "a", "b", GateExpr()));
    d.add(Node::gate1("g2", "b", "a", GateExpr()));
    auto vs = validate(d);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].kind, "cycle");
}

TEST(evaluate, bare_cup_is_epr) {
    double s = 1 / std::sqrt(2.0);
    ComplexMatrix expected(4, 1, {s, 0, 0, s});
    EXPECT_LE(evaluate(bare_cup()).max_abs_diff(expected), 1e-15);
}

TEST(evaluate, cup_with_pauli_dot_is_bell_state) {
    for (unsigned k = 0; k < 4; k++) {
        Outcome o = Outcome::from_index(k);
        ComplexMatrix got = evaluate(cup_with_dot(GateExpr::pauli(o.i, o.j), true));
        EXPECT_LE(got.column(0).max_abs_diff(gates::bell(o.i, o.j)), 1e-15);
    }
}

TEST(evaluate, chain_of_two_is_quarter_identity) {
    ComplexMatrix got = evaluate(chain_of_two());
    EXPECT_LE(got.max_abs_diff(gates::I() * Complex{0.25, 0}), 1e-15);
}

TEST(evaluate, scalar_is_multiplicative) {
    Diagram d = chain_of_two();
    ComplexMatrix before = evaluate(d);
    Scalar s(Complex{0.3, -0.4}, 3);
    d.scalar *= s;
    EXPECT_LE(evaluate(d).max_abs_diff(before * s.value()), 1e-15);
}

TEST(evaluate, slide_law_on_cups_and_caps) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; trial++) {
        GateExpr m = GateExpr::literal(test_util::random_unitary(2, rng));
        ComplexMatrix right = evaluate(cup_with_dot(m, true));
        ComplexMatrix left = evaluate(cup_with_dot(m.transpose(), false));
        ASSERT_LE(right.max_abs_diff(left), 1e-10);
        ASSERT_LE(evaluate(cap_with_dot(m, true)).max_abs_diff(evaluate(cap_with_dot(m.transpose(), false))),
                  1e-10);
        // Cap with M' is the adjoint of cup with M.
        ASSERT_LE(evaluate(cap_with_dot(m.dagger(), true)).max_abs_diff(dagger(right)), 1e-10);
    }
}

TEST(evaluate, bent_wire_gives_half_trace) {
    for (const char *name : {"I", "X", "Z", "H", "T"}) {
        GateExpr u = GateExpr::parse(name);
        Diagram d;
        d.add(Node::cup("c", "a", "b"));
        d.add(Node::gate1("g", "b", "b2", u));
        d.add(Node::cap("k", "a", "b2"));
        Complex got = evaluate(d)(0, 0);
        EXPECT_LE(std::abs(got - u.matrix().trace() * 0.5), 1e-15) << name;
    }
}

TEST(evaluate, boxes_and_kets) {
    // CNOT(H (x) I)|00> is the Bell pair.
    Diagram d;
    d.outputs = {"p", "q"};
    d.add(Node::ket0("k0", "a"));
    d.add(Node::ket0("k1", "b"));
    d.add(Node::gate1("h", "a", "a2", GateExpr::parse("H")));
    d.add(Node::gate2("cx", "a2", "b", "p", "q", TwoQubitGate::cnot()));
    EXPECT_LE(evaluate(d).column(0).max_abs_diff(gates::epr()), 1e-15);

    // Reversed control on the second slot.
    Diagram r;
    r.inputs = {"a", "b"};
    r.outputs = {"c", "d"};
    r.add(Node::gate2("cx", "a", "b", "c", "d", TwoQubitGate::cnot(1)));
    EXPECT_EQ(evaluate(r), gates::CNOT_reversed());

    // Output order permutes the legs.
    Diagram swap;
    swap.inputs = {"a", "b"};
    swap.outputs = {"b", "a"};
    ComplexMatrix m = evaluate(swap);
    EXPECT_EQ((m * ComplexVector::basis(4, 1)).max_abs_diff(ComplexVector::basis(4, 2)), 0);
}

TEST(evaluate, refuses_invalid_or_oversized) {
    Diagram bad;
    bad.outputs = {"a"};
    bad.add(Node::cup("n1", "a", "b"));
    EXPECT_THROW(evaluate(bad), std::invalid_argument);

    Diagram big;
    for (int k = 0; k < 9; k++) {
        std::string a = "a" + std::to_string(k), b = "b" + std::to_string(k);
        big.add(Node::cup("c" + std::to_string(k), a, b));
        big.outputs.push_back(a);
        big.outputs.push_back(b);
    }
    EXPECT_THROW(evaluate(big), ResourceError);
}

TEST(diagram_text, serialize_bare_cup) {
    EXPECT_EQ(serialize(bare_cup()),
              "diagram cup\n"
              "scalar 1 0 0\n"
              "input\n"
              "output a b\n"
              "node n1 cup a b\n");
}

TEST(diagram_text, parse_minimal) {
    Diagram d = parse_diagram("diagram cup\noutput a b\nnode n1 cup a b\n");
    EXPECT_EQ(canonical_form(d), canonical_form(bare_cup()));
    EXPECT_EQ(d.scalar, Scalar::one());
}

TEST(diagram_text, parse_full_syntax) {
    Diagram d = parse_diagram(R"(# comment line
diagram demo   # trailing comment
scalar 0.5 0 0
input a b
output c d
node g1 gate1 a a1 gate=mat2(0.6, 0.8j, 0.8j, 0.6)
node g2 gate2 a1 b c d gate=cu(T'.H)
)");
    EXPECT_EQ(d.scalar, Scalar::half());
    EXPECT_EQ(d.nodes.size(), 2u);
    EXPECT_EQ(d.node("g2").box.u.str(), "T'.H");
    EXPECT_TRUE(validate(d).empty());
}

TEST(diagram_text, errors_carry_positions) {
    try {
        parse_diagram("diagram x\noutput a zz\nnode n1 cup a b\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 10u);
        EXPECT_NE(std::string(e.what()).find("undefined edge 'zz'"), std::string::npos);
    }
    try {
        parse_diagram("diagram x\nnode n1 gate1 a b gate=Y\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("unknown gate name"), std::string::npos);
    }
    try {
        parse_diagram("diagram x\nnode n1 cup a\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("takes 2 edges"), std::string::npos);
    }
    EXPECT_THROW(parse_diagram("node n1 cup a b\n"), ParseError);
    EXPECT_THROW(parse_diagram("diagram x\nscalar 1 0\n"), ParseError);
    EXPECT_THROW(parse_diagram("diagram x\nwire a\n"), ParseError);
    EXPECT_THROW(parse_diagram(""), ParseError);
}

TEST(diagram_text, round_trip_is_isomorphic) {
    Diagram d;
    d.name = "two_gate";
    d.scalar = Scalar::half() * Scalar::half();
    d.inputs = {"alpha", "beta"};
    d.outputs = {"o1", "o2"};
    d.add(Node::cup("c1", "l1", "r1"));
    d.add(Node::cup("c2", "l2", "r2"));
    d.add(Node::gate2("cu", "r1", "r2", "o1", "o2", TwoQubitGate::cnot()));
    d.add(Node::gate1("m", "l1", "l1b", GateExpr::parse("Z.X")));
    d.add(Node::cap("k1", "alpha", "l1b"));
    d.add(Node::cap("k2", "beta", "l2"));
    Diagram back = parse_diagram(serialize(d));
    EXPECT_EQ(canonical_form(back), canonical_form(d));
    EXPECT_EQ(back.scalar, d.scalar);
    EXPECT_EQ(serialize(back), serialize(d));
    EXPECT_LE(evaluate(back).max_abs_diff(evaluate(d)), 1e-15);
}

TEST(diagram_text, multi_diagram_documents) {
    auto all = parse_document("diagram a\noutput x y\nnode c cup x y\ndiagram b\ninput p\noutput p\n");
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[1].name, "b");
    EXPECT_EQ(evaluate(all[1]), gates::I());
    EXPECT_THROW(parse_diagram(serialize_document(all)), ParseError);
}
