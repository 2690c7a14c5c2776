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

#include "tlc/clifford.h"

#include <stdexcept>
#include <vector>

#include "tlc/gates.h"

namespace tlc {

ControlledGate parse_controlled_gate(std::string_view name) {
    if (name == "cnot" || name == "CNOT") {
        return ControlledGate::kCnot;
    }
    if (name == "cz" || name == "CZ") {
        return ControlledGate::kCz;
    }
    throw std::invalid_argument("unknown controlled gate '" + std::string(name) + "' (expected cnot or cz)");
}

std::string_view controlled_gate_name(ControlledGate g) {
    return g == ControlledGate::kCnot ? "cnot" : "cz";
}

ComplexMatrix controlled_gate_matrix(ControlledGate g) {
    return g == ControlledGate::kCnot ? gates::CNOT() : gates::CZ();
}

namespace {

PauliString pow_x(bool e) {
    return PauliString::single(1, 0, e, false);
}

PauliString pow_z(bool e) {
    return PauliString::single(1, 0, false, e);
}

}  // namespace

ComplexMatrix conjugated_outcome_operator(ControlledGate gate, Outcome first, Outcome second) {
    ComplexMatrix cu = controlled_gate_matrix(gate);
    ComplexMatrix m_star = conjugate(PauliString::from_outcome(first).to_matrix());
    ComplexMatrix n_dag = dagger(PauliString::from_outcome(second).to_matrix());
    return cu * tensor(m_star, n_dag) * dagger(cu);
}

std::array<CorrectionEntry, 16> correction_table(ControlledGate gate) {
    std::array<CorrectionEntry, 16> table;
    for (unsigned k = 0; k < 16; k++) {
        Outcome first = Outcome::from_index(k >> 2);
        Outcome second = Outcome::from_index(k & 3);
        bool i1 = first.i, j1 = first.j, i2 = second.i, j2 = second.j;
        CorrectionEntry e{first, second, PauliString(1), PauliString(1), 1};
        if (gate == ControlledGate::kCnot) {
            e.q = pow_z(j2) * pow_z(j1) * pow_x(i1);
            e.p = pow_x(i2) * pow_z(j2) * pow_x(i1);
        } else {
            e.q = pow_z(i2) * pow_x(i1) * pow_z(j1);
            e.p = pow_z(j2) * pow_x(i2) * pow_z(i1);
        }
        ComplexMatrix lhs = conjugated_outcome_operator(gate, first, second);
        auto lambda = equal_upto_phase(lhs, tensor(e.q.to_matrix(), e.p.to_matrix()));
        if (!lambda.has_value()) {
            throw std::logic_error("correction formula does not match CU conjugation");
        }
        e.phase = *lambda;
        table[k] = e;
    }
    return table;
}

std::string_view hierarchy_name(HierarchyLevel level) {
    switch (level) {
        case HierarchyLevel::kC1:
            return "C1";
        case HierarchyLevel::kC2:
            return "C2";
        case HierarchyLevel::kC3:
            return "C3";
        case HierarchyLevel::kBeyond:
            return "beyond";
    }
    return "beyond";
}

bool is_pauli_upto_phase(const ComplexMatrix &m, double tol) {
    return match_pauli(m, tol).has_value();
}

namespace {

std::vector<ComplexMatrix> generators(size_t n) {
    std::vector<ComplexMatrix> out;
    for (size_t q = 0; q < n; q++) {
        out.push_back(PauliString::single(n, q, true, false).to_matrix());
        out.push_back(PauliString::single(n, q, false, true).to_matrix());
    }
    return out;
}

bool maps_generators_into(const ComplexMatrix &u, const std::vector<ComplexMatrix> &gens, int level, double tol);

bool in_level(const ComplexMatrix &v, const std::vector<ComplexMatrix> &gens, int level, double tol) {
    if (level == 1) {
        return is_pauli_upto_phase(v, tol);
    }
    return maps_generators_into(v, gens, level - 1, tol);
}

bool maps_generators_into(const ComplexMatrix &u, const std::vector<ComplexMatrix> &gens, int level, double tol) {
    ComplexMatrix u_dag = dagger(u);
    for (const auto &g : gens) {
        if (!in_level(u * g * u_dag, gens, level, tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace

HierarchyLevel classify_hierarchy(const ComplexMatrix &u, size_t num_qubits, double tol) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw std::invalid_argument("classify_hierarchy supports 1 or 2 qubits");
    }
    if (!u.is_square() || u.rows() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("classify_hierarchy: matrix size does not match qubit count");
    }
    if (!is_unitary(u, tol)) {
        throw std::invalid_argument("classify_hierarchy: input is not unitary");
    }
    auto gens = generators(num_qubits);
    for (int level = 1; level <= 3; level++) {
        if (in_level(u, gens, level, tol)) {
            return static_cast<HierarchyLevel>(level);
        }
    }
    return HierarchyLevel::kBeyond;
}

ComplexMatrix single_qubit_residual(const ComplexMatrix &u, const PauliString &m) {
    if (u.rows() != 2 || u.cols() != 2 || m.num_qubits() != 1) {
        throw std::invalid_argument("single_qubit_residual expects single-qubit operands");
    }
    return u * transpose(m.to_matrix()) * dagger(u);
}

}  // namespace tlc
