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

#ifndef TLC_PAULI_H
#define TLC_PAULI_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tlc/linalg.h"

namespace tlc {

/// A Bell-measurement result (i, j), labelling |psi(ij)> and M = X^i Z^j.
struct Outcome {
    bool i = false;
    bool j = false;

    /// Index in lexicographic order: 2*i + j.
    unsigned index() const { return (i ? 2u : 0u) + (j ? 1u : 0u); }
    static Outcome from_index(unsigned k) { return {(k & 2) != 0, (k & 1) != 0}; }
    std::string str() const { return std::string{i ? '1' : '0', j ? '1' : '0'}; }
    bool operator==(const Outcome &) const = default;
};

/// i^phase * (x) over qubits of X^{x_q} Z^{z_q}.
///
/// Each qubit factor is written X-before-Z, so XZ means the matrix product X*Z
/// (which equals -iY). Qubit 0 is the leftmost tensor factor.
class PauliString {
   public:
    static constexpr size_t kMaxQubits = 32;

    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses an optional phase prefix in {"", "+", "i", "-", "-i"} followed by
    /// factors in {I, X, Z, XZ} joined with "⊗" or "x".
    static PauliString from_str(std::string_view text);
    /// Single-qubit X^x Z^z on qubit q of an n-qubit register.
    static PauliString single(size_t num_qubits, size_t q, bool x, bool z);
    /// M = X^i Z^j as a one-qubit string.
    static PauliString from_outcome(Outcome o);
    /// The Pauli string equal to m, phase included. Empty when m is not a
    /// Pauli string times a power of i.
    static std::optional<PauliString> from_matrix(const ComplexMatrix &m, double tol = kTolerance);

    size_t num_qubits() const { return num_qubits_; }
    bool x(size_t q) const { return (x_bits_ >> q) & 1; }
    bool z(size_t q) const { return (z_bits_ >> q) & 1; }
    void set(size_t q, bool x, bool z);
    /// Power of i in {0, 1, 2, 3}.
    unsigned phase_exponent() const { return phase_; }
    Complex phase() const;
    PauliString with_phase_exponent(unsigned k) const;
    /// Same operator content with phase +1.
    PauliString unsigned_part() const { return with_phase_exponent(0); }

    /// Product this * other with exact phase tracking.
    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;
    PauliString dagger() const;
    bool commutes_with(const PauliString &other) const;
    size_t weight() const;
    bool is_identity() const { return x_bits_ == 0 && z_bits_ == 0; }

    /// Restriction to one qubit, phase dropped.
    PauliString factor(size_t q) const;
    /// Tensor product this (x) other; phases multiply.
    PauliString tensor(const PauliString &other) const;

    ComplexMatrix to_matrix() const;

    std::string str() const;        // "-XZ⊗X"
    std::string ascii_str() const;  // "-XZxX"

   private:
    size_t num_qubits_ = 0;
    uint32_t x_bits_ = 0;
    uint32_t z_bits_ = 0;
    unsigned phase_ = 0;
};

/// Conjugation p -> G p G^dagger with exact phase for a few Clifford gates.
/// A phase-free Pauli string P and a unit complex phase with m = phase * P.
struct PauliMatch {
    PauliString pauli;
    Complex phase;
};

/// Matches m against every Pauli string up to an arbitrary global phase.
std::optional<PauliMatch> match_pauli(const ComplexMatrix &m, double tol = kTolerance);

PauliString conjugate_by_cnot(const PauliString &p, size_t control, size_t target);
PauliString conjugate_by_cz(const PauliString &p, size_t a, size_t b);
PauliString conjugate_by_h(const PauliString &p, size_t q);
/// Two-qubit forms with the first qubit as control.
PauliString conjugate_by_cnot(const PauliString &p);
PauliString conjugate_by_cz(const PauliString &p);

}  // namespace tlc

#endif
