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

#include "tlc/statevec.h"

#include <cmath>

#include "gtest/gtest.h"

#include "tlc/gates.h"
#include "tlc/protocols.h"

using namespace tlc;

TEST(statevec, apply_gate_basics) {
    QuantumState plus = QuantumState::zero(1).apply_gate(gates::H(), {0});
    EXPECT_LE(plus.amplitudes().max_abs_diff(ComplexVector{std::sqrt(0.5), std::sqrt(0.5)}), 1e-15);

    QuantumState pair = QuantumState::zero(2).apply_gate(gates::H(), {0}).apply_gate(gates::CNOT(), {0, 1});
    EXPECT_LE(pair.amplitudes().max_abs_diff(gates::epr()), 1e-15);

    QuantumState ghz = pair.tensor(QuantumState::zero(1)).apply_gate(gates::CNOT(), {1, 2});
    EXPECT_LE(ghz.amplitudes().max_abs_diff(gates::ghz()), 1e-15);
    EXPECT_NEAR(std::abs(ghz.amplitudes()[0]), 1 / std::sqrt(2.0), 1e-15);
}

TEST(statevec, apply_gate_errors) {
    QuantumState s = QuantumState::zero(2);
    EXPECT_THROW(s.apply_gate(gates::H(), {2}), std::out_of_range);
    EXPECT_THROW(s.apply_gate(gates::CNOT(), {1, 1}), std::invalid_argument);
    EXPECT_THROW(s.apply_gate(gates::H() * Complex{2, 0}, {0}), std::invalid_argument);
    EXPECT_THROW(s.apply_gate(gates::CNOT(), {0}), std::invalid_argument);
    EXPECT_THROW(QuantumState::zero(9), std::invalid_argument);
    EXPECT_THROW(QuantumState(ComplexVector{1, 1}), std::invalid_argument);
}

TEST(statevec, unitarity_preserved) {
    SplitMix64 rng(11);
    const ComplexMatrix gs[] = {gates::H(), gates::S(), gates::T(), gates::X()};
    QuantumState s(random_state(4, rng));
    for (int k = 0; k < 200; k++) {
        size_t q = rng.next() % 4;
        if (k % 3 == 0) {
            size_t t = (q + 1 + rng.next() % 3) % 4;
            s = s.apply_gate(gates::CNOT(), {q, t});
        } else {
            s = s.apply_gate(gs[rng.next() % 4], {q});
        }
        ASSERT_NEAR(s.amplitudes().norm(), 1, 1e-10);
    }
}

TEST(statevec, teleport_measurement) {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        ComplexVector alpha = random_state(1, rng);
        QuantumState s = QuantumState(alpha).tensor(QuantumState(gates::epr()));
        for (unsigned k = 0; k < 4; k++) {
            Outcome o = Outcome::from_index(k);
            MeasurementRecord r = measure_bell_postselect(s, 0, 1, o);
            EXPECT_NEAR(r.probability, 0.25, 1e-12);
            EXPECT_EQ(r.post_state.dim(), 2u);
            ComplexVector expected = gates::pauli_xz(o.i, o.j) * alpha;
            EXPECT_NEAR(fidelity(r.post_state, expected), 1, 1e-12);
            ComplexVector corrected = gates::pauli_xz(false, o.j) * (gates::pauli_xz(o.i, false) * r.post_state);
            EXPECT_NEAR(fidelity(corrected, alpha), 1, 1e-10);
        }
    }
}

TEST(statevec, retained_pair) {
    QuantumState s = QuantumState(ComplexVector{0.6, 0.8}).tensor(QuantumState(gates::epr()));
    MeasurementRecord r = measure_bell_postselect(s, 0, 1, {true, false}, true);
    EXPECT_TRUE(r.retained);
    ASSERT_EQ(r.post_state.dim(), 8u);
    ComplexVector expected = tensor(gates::bell(true, false), gates::X() * ComplexVector{0.6, 0.8});
    EXPECT_NEAR(fidelity(r.post_state, expected), 1, 1e-12);
}

TEST(statevec, measuring_a_bell_pair) {
    auto records = measure_bell_enumerate(QuantumState(gates::epr()), 0, 1);
    ASSERT_EQ(records.size(), 4u);
    EXPECT_NEAR(records[0].probability, 1, 1e-12);
    for (size_t k = 1; k < 4; k++) {
        EXPECT_EQ(records[k].probability, 0);
    }
    EXPECT_THROW(measure_bell_postselect(QuantumState(gates::epr()), 0, 1, {true, true}), std::domain_error);
    EXPECT_THROW(measure_bell_enumerate(QuantumState(gates::epr()), 1, 1), std::invalid_argument);
}

TEST(statevec, hadamard_ghz_pairs_are_uniform) {
    ComplexMatrix h = gates::H();
    std::array<ComplexMatrix, 3> hs{h, h, h};
    QuantumState hg(tensor_all(hs) * gates::ghz());
    QuantumState s = hg.tensor(QuantumState(gates::ghz()));
    double total = 0;
    for (const auto &r : measure_bell_enumerate(s, 2, 3)) {
        EXPECT_NEAR(r.probability, 0.25, 1e-12);
        total += r.probability;
    }
    EXPECT_NEAR(total, 1, 1e-12);
}

TEST(statevec, born_completeness) {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; trial++) {
        QuantumState s(random_state(3, rng));
        size_t q1 = rng.next() % 3;
        size_t q2 = (q1 + 1 + rng.next() % 2) % 3;
        double total = 0;
        for (const auto &r : measure_bell_enumerate(s, q1, q2)) {
            ASSERT_GE(r.probability, 0);
            ASSERT_LE(r.probability, 1);
            total += r.probability;
        }
        ASSERT_NEAR(total, 1, 1e-10);
    }
}

TEST(statevec, sampling_is_reproducible_and_fair) {
    ComplexVector alpha = ComplexVector{Complex{0.6, 0}, Complex{0, 0.8}};
    QuantumState s = QuantumState(alpha).tensor(QuantumState(gates::epr()));
    auto run = [&](uint64_t seed) {
        SplitMix64 rng(seed);
        std::array<size_t, 4> counts{};
        std::vector<unsigned> sequence;
        for (int k = 0; k < 10000; k++) {
            unsigned o = measure_bell_sample(s, 0, 1, rng).outcome.index();
            counts[o]++;
            sequence.push_back(o);
        }
        return std::make_pair(counts, sequence);
    };
    auto a = run(42), b = run(42);
    EXPECT_EQ(a.second, b.second);
    for (size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(a.first[k] / 10000.0, 0.25, 0.02);
    }
    EXPECT_NE(run(43).second, a.second);
}

TEST(statevec, splitmix_known_values) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    SplitMix64 a(7), b(7);
    SplitMix64 child = a.split();
    b.next();
    EXPECT_NE(child.next(), b.next());
}

TEST(statevec, fidelity) {
    SplitMix64 rng(3);
    ComplexVector s = random_state(2, rng);
    EXPECT_NEAR(fidelity(s, s), 1, 1e-15);
    EXPECT_NEAR(fidelity(s, s * Complex{0, 1}), 1, 1e-15);
    EXPECT_EQ(fidelity(ComplexVector{1, 0}, ComplexVector{0, 1}), 0);
    EXPECT_THROW(fidelity(s, ComplexVector{1, 0}), std::invalid_argument);
}

TEST(statevec, state_literals) {
    ParsedState p = parse_state_literal("0.6, 0.8j");
    EXPECT_TRUE(p.warning.empty());
    EXPECT_EQ(p.state.amplitudes()[1], (Complex{0, 0.8}));

    ParsedState q = parse_state_literal("1,1");
    EXPECT_FALSE(q.warning.empty());
    EXPECT_NEAR(q.state.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);

    EXPECT_THROW(parse_state_literal("1,0,0"), std::invalid_argument);
    EXPECT_THROW(parse_state_literal("0,0"), std::invalid_argument);
    EXPECT_THROW(parse_state_literal("1,x"), std::invalid_argument);
}
