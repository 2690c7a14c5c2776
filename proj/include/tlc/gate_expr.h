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

#ifndef TLC_GATE_EXPR_H
#define TLC_GATE_EXPR_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/linalg.h"
#include "tlc/pauli.h"

namespace tlc {

enum class NamedGate { kX, kZ, kH, kS, kT };

/// One factor of a gate product: a named gate (optionally daggered) or a
/// literal 2x2 matrix with its modifiers already applied.
struct GateFactor {
    std::optional<NamedGate> name;
    bool dagger = false;  // only meaningful for named gates
    ComplexMatrix literal;

    ComplexMatrix matrix() const;
    bool operator==(const GateFactor &other) const;
};

/// A symbolic single-qubit gate: the ordered matrix product of its factors,
/// so "X.Z" is the matrix X*Z. The empty product is the identity.
///
/// Text grammar:
///   expr    := term ('.' term)*
///   term    := primary ("'" | "^T" | "^*")*
///   primary := I | X | Z | H | S | T | mat2(c,c,c,c) | '(' expr ')'
/// where ' is the Hermitian conjugate and c is a complex literal re+imj.
class GateExpr {
   public:
    GateExpr() = default;
    static GateExpr named(NamedGate g, bool dagger = false);
    static GateExpr literal(const ComplexMatrix &m);
    /// X^x Z^z with the phase dropped.
    static GateExpr pauli(bool x, bool z);
    static GateExpr parse(std::string_view text);

    const std::vector<GateFactor> &factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }

    ComplexMatrix matrix() const;
    GateExpr transpose() const;
    GateExpr conjugate() const;
    GateExpr dagger() const;
    /// this * other (other acts first).
    GateExpr then_after(const GateExpr &other) const;
    friend GateExpr operator*(const GateExpr &a, const GateExpr &b) { return a.then_after(b); }

    /// The Pauli string (with phase) this expression equals, if any.
    std::optional<PauliString> as_pauli(double tol = kTolerance) const;

    std::string str() const;
    bool operator==(const GateExpr &other) const = default;

   private:
    void simplify();
    std::vector<GateFactor> factors_;
};

/// Two-qubit box contents. Slot 0 is the most significant qubit.
struct TwoQubitGate {
    enum class Kind { kCnot, kCz, kCu };
    Kind kind = Kind::kCnot;
    size_t control_slot = 0;  // CNOT only
    GateExpr u;               // CU only

    static TwoQubitGate cnot(size_t control_slot = 0) { return {Kind::kCnot, control_slot, {}}; }
    static TwoQubitGate cz() { return {Kind::kCz, 0, {}}; }
    static TwoQubitGate cu(GateExpr u) { return {Kind::kCu, 0, std::move(u)}; }
    /// cnot | cnot(0) | cnot(1) | cz | cu(<expr>)
    static TwoQubitGate parse(std::string_view text);

    ComplexMatrix matrix() const;
    std::string str() const;
    bool operator==(const TwoQubitGate &other) const = default;
};

/// Parses a complex literal such as "0.5", "-2j", "0.1+0.2j" or "1-i".
Complex parse_complex(std::string_view text);
std::string format_complex_literal(Complex z);

}  // namespace tlc

#endif
