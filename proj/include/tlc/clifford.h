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

#ifndef TLC_CLIFFORD_H
#define TLC_CLIFFORD_H

#include <array>
#include <string>
#include <string_view>

#include "tlc/linalg.h"
#include "tlc/pauli.h"

namespace tlc {

enum class ControlledGate { kCnot, kCz };

ControlledGate parse_controlled_gate(std::string_view name);
std::string_view controlled_gate_name(ControlledGate g);
ComplexMatrix controlled_gate_matrix(ControlledGate g);

/// One row of a two-qubit gate-teleportation correction table.
///
/// For outcomes M = X^i1 Z^j1 and N = X^i2 Z^j2 the gate satisfies
///   CU (M* (x) N^dagger) CU^dagger = phase * (Q (x) P),
/// where Q and P are the closed-form products (exact phase kept in each).
struct CorrectionEntry {
    Outcome first;   // (i1, j1)
    Outcome second;  // (i2, j2)
    PauliString q;
    PauliString p;
    Complex phase;
};

/// All 16 rows, ordered by (i1, j1, i2, j2) lexicographically.
std::array<CorrectionEntry, 16> correction_table(ControlledGate gate);

/// Left-hand side CU (M* (x) N^dagger) CU^dagger evaluated as a matrix.
ComplexMatrix conjugated_outcome_operator(ControlledGate gate, Outcome first, Outcome second);

enum class HierarchyLevel { kC1 = 1, kC2 = 2, kC3 = 3, kBeyond = 4 };

std::string_view hierarchy_name(HierarchyLevel level);

/// Level of u in the gate hierarchy C1 (Pauli) < C2 (Clifford) < C3, for 1
/// or 2 qubits. Membership of C_k is tested by conjugating every generator
/// X_q, Z_q and checking the result lies in C_{k-1}.
HierarchyLevel classify_hierarchy(const ComplexMatrix &u, size_t num_qubits, double tol = kTolerance);

bool is_pauli_upto_phase(const ComplexMatrix &m, double tol = kTolerance);

/// The single-qubit gate-teleportation correction U M^T U^dagger.
ComplexMatrix single_qubit_residual(const ComplexMatrix &u, const PauliString &m);

}  // namespace tlc

#endif
