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

#include "tlc/linalg.h"

#include <random>

#include "gtest/gtest.h"

#include "test_util.h"
#include "tlc/gates.h"
#include "tlc/scalar.h"

using namespace tlc;

TEST(linalg, tensor_orders_first_factor_high) {
    ComplexVector zero_zero = ComplexVector::basis(4, 0);
    EXPECT_EQ((tensor(gates::I(), gates::X()) * zero_zero).max_abs_diff(ComplexVector::basis(4, 1)), 0);
    EXPECT_EQ((tensor(gates::X(), gates::I()) * zero_zero).max_abs_diff(ComplexVector::basis(4, 2)), 0);
}

TEST(linalg, tensor_xz_on_epr) {
    double s = 1 / std::sqrt(2.0);
    ComplexVector expected{0, s, -s, 0};
    ComplexVector got = tensor(gates::I(), gates::X() * gates::Z()) * gates::epr();
    EXPECT_LE(got.max_abs_diff(expected), 1e-15);
}

TEST(linalg, tensor_is_associative) {
    std::mt19937_64 rng(5);
    auto a = test_util::random_unitary(2, rng);
    auto b = test_util::random_unitary(4, rng);
    auto c = test_util::random_unitary(2, rng);
    EXPECT_LE(tensor(tensor(a, b), c).max_abs_diff(tensor(a, tensor(b, c))), 1e-15);
}

TEST(linalg, dagger_transpose_conjugate) {
    ComplexMatrix xz = gates::X() * gates::Z();
    EXPECT_EQ(transpose(gates::X()), gates::X());
    EXPECT_EQ(dagger(xz), gates::Z() * gates::X());
    EXPECT_EQ(dagger(xz), (xz * Complex{-1, 0}));
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            ComplexMatrix m = gates::pauli_xz(i, j);
            EXPECT_EQ(conjugate(m), m);
        }
    }
    std::mt19937_64 rng(7);
    auto u = test_util::random_unitary(4, rng);
    EXPECT_EQ(dagger(dagger(u)), u);
    EXPECT_EQ(transpose(conjugate(u)), dagger(u));
}

TEST(linalg, equal_upto_phase) {
    ComplexMatrix xz = gates::X() * gates::Z();
    ComplexMatrix zx = gates::Z() * gates::X();
    auto same = equal_upto_phase(gates::X(), gates::X());
    ASSERT_TRUE(same.has_value());
    EXPECT_EQ(*same, Complex(1, 0));
    auto flipped = equal_upto_phase(xz, zx);
    ASSERT_TRUE(flipped.has_value());
    EXPECT_EQ(*flipped, Complex(-1, 0));
    EXPECT_FALSE(equal_upto_phase(gates::X(), gates::Z()).has_value());
    EXPECT_THROW(equal_upto_phase(gates::X(), gates::CNOT()), std::invalid_argument);
}

TEST(linalg, equal_upto_phase_is_an_equivalence_on_paulis) {
    std::vector<ComplexMatrix> set;
    for (int p = 0; p < 4; p++) {
        for (int k = 0; k < 4; k++) {
            set.push_back(gates::pauli_xz(p & 1, p & 2) * std::pow(Complex{0, 1}, k));
        }
    }
    for (const auto &a : set) {
        EXPECT_TRUE(equal_upto_phase(a, a, 0).has_value());
        for (const auto &b : set) {
            bool ab = equal_upto_phase(a, b, 0).has_value();
            EXPECT_EQ(ab, equal_upto_phase(b, a, 0).has_value());
            for (const auto &c : set) {
                if (ab && equal_upto_phase(b, c, 0).has_value()) {
                    EXPECT_TRUE(equal_upto_phase(a, c, 0).has_value());
                }
            }
        }
    }
}

TEST(linalg, is_unitary) {
    EXPECT_TRUE(is_unitary(gates::X()));
    EXPECT_TRUE(is_unitary((gates::X() + gates::Z()) * Complex{1 / std::sqrt(2.0), 0}));
    EXPECT_FALSE(is_unitary((gates::X() + gates::Z()) * Complex{0.5, 0}));
    EXPECT_TRUE(is_unitary(gates::H()));
}

TEST(linalg, rejects_non_finite_and_bad_shapes) {
    EXPECT_THROW(ComplexVector({Complex{NAN, 0}, 0}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(3, 3), std::invalid_argument);
    EXPECT_THROW(ComplexVector(3), std::invalid_argument);
}

TEST(linalg, embed_places_gate_on_targets) {
    // CNOT with control on qubit 2 and target on qubit 0 of three.
    std::vector<size_t> targets{2, 0};
    ComplexMatrix m = embed(gates::CNOT(), targets, 3);
    EXPECT_EQ((m * ComplexVector::basis(8, 0b001)).max_abs_diff(ComplexVector::basis(8, 0b101)), 0);
    EXPECT_EQ((m * ComplexVector::basis(8, 0b100)).max_abs_diff(ComplexVector::basis(8, 0b100)), 0);
}

TEST(scalar, canonical_form) {
    Scalar half(0.5);
    EXPECT_EQ(half, Scalar::half());
    EXPECT_EQ(half.coeff(), Complex(1, 0));
    EXPECT_EQ(half.sqrt2_exp(), -2);
    Scalar quarter = Scalar::half() * Scalar::half();
    EXPECT_EQ(quarter.sqrt2_exp(), -4);
    EXPECT_EQ(quarter.str(), "1/4");
    EXPECT_EQ(Scalar::inv_sqrt2().str(), "1/sqrt2");
    EXPECT_EQ(Scalar(0.0), Scalar(0.0, 7));
    EXPECT_TRUE(Scalar(0.0).is_zero());
    EXPECT_NEAR(std::abs(Scalar(0.3, 3).value() - 0.3 * std::pow(2, 1.5)), 0, 1e-15);
    double mag = std::abs(Scalar(Complex{3, 4}, 1).coeff());
    EXPECT_GT(mag, 1 / std::sqrt(2.0));
    EXPECT_LE(mag, 1.0);
}

TEST(scalar, multiplication_adds_exponents) {
    Scalar a(Complex{0, 1}, -3), b(Complex{0, -1}, 5);
    Scalar c = a * b;
    EXPECT_EQ(c.sqrt2_exp(), 2);
    EXPECT_EQ(c.coeff(), Complex(1, 0));
    EXPECT_EQ(c.str(), "2");
}
