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

#ifndef TLC_PROTOCOLS_H
#define TLC_PROTOCOLS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/clifford.h"
#include "tlc/diagram.h"
#include "tlc/gate_expr.h"
#include "tlc/rewrite.h"
#include "tlc/statevec.h"

namespace tlc {

enum class ProtocolKind { kTeleport, kChained, kSingle, kCu, kGhz, kGhzHadamard, kChi };

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::kTeleport;
    size_t length = 1;        // chained: number of hops, 1..6
    GateExpr u;               // single: the teleported gate
    TwoQubitGate box;         // cu: cnot, cz or cu(<expr>)

    static ProtocolSpec teleport() { return {}; }
    static ProtocolSpec chained(size_t k);
    static ProtocolSpec single(GateExpr u);
    static ProtocolSpec cu(TwoQubitGate box);
    static ProtocolSpec ghz() { return {ProtocolKind::kGhz, 1, {}, {}}; }
    static ProtocolSpec ghz_hadamard() { return {ProtocolKind::kGhzHadamard, 1, {}, {}}; }
    static ProtocolSpec chi() { return {ProtocolKind::kChi, 1, {}, {}}; }

    /// Names: teleport, chained, single, cu, ghz, ghz_hadamard, chi (the long
    /// forms chained_teleport, gate_teleport_single, gate_teleport_cu and
    /// chi_prepare are accepted too). `gate` is required for single and cu.
    static ProtocolSpec parse(std::string_view name, std::string_view gate = "", size_t length = 1);

    std::string name() const;
    /// Number of Bell measurements.
    size_t measurements() const;
    /// Number of unknown input qubits.
    size_t inputs() const;
};

/// The protocol's diagram for one outcome per Bell measurement. A Bell
/// measurement with outcome M = X^i Z^j is a cap fed through a dot M' on
/// its right leg; the post-measurement cup is dropped and identity dots
/// are omitted.
Diagram build_diagram(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes);

/// The circuit semantics, postselected on the given outcomes.
struct CircuitRun {
    ComplexVector state;  // renormalized state of the surviving qubits
    double probability = 0;
};
CircuitRun simulate_circuit(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes,
                            const std::vector<ComplexVector> &inputs);
/// Draws every outcome from the Born rule in measurement order.
std::vector<Outcome> sample_outcomes(const ProtocolSpec &spec, const std::vector<ComplexVector> &inputs,
                                     SplitMix64 &rng);

/// The state the corrected output should equal.
ComplexVector protocol_target(const ProtocolSpec &spec, const std::vector<ComplexVector> &inputs);

/// Correction operator for one outcome assignment, with a printable name.
struct Correction {
    ComplexMatrix matrix;
    std::string text;
};
Correction protocol_correction(const ProtocolSpec &spec, const std::vector<Outcome> &outcomes);

/// (1 (x) CNOT_32 (x) 1)(|psi(00)> (x) |psi(00)>), control on qubit 3.
QuantumState chi_state();
/// Every Pauli string (phase dropped) P with P * post ~ |chi> for the
/// post-measurement state of chi with this outcome. 256 candidates are tried.
std::vector<PauliString> chi_correction_candidates(Outcome outcome);
/// The correction read off the normal form of the chi diagram (the inverse
/// of its residual Pauli frame). Throws std::logic_error if the brute-force
/// candidates do not contain it.
PauliString chi_correction(Outcome outcome);

/// The dot product standing directly below each output of a diagram; the
/// identity where no dot is attached.
std::vector<GateExpr> output_frame(const Diagram &d);

struct IdentityCheck {
    std::string name;
    double deviation = 0;
    bool exact = false;  // deviation <= 1e-12
};

/// Hadamard sandwich, (H (x) H (x) H)|G> against its diagram, CNOT_52 and
/// CNOT_56 commuting, and CNOT (X^i Z^j (x) I) CNOT = X^i Z^j (x) X^i.
std::vector<IdentityCheck> ghz_identities_check();

struct BranchRecord {
    std::vector<Outcome> outcomes;
    double probability = 0;
    Scalar scalar;                  // normal form scalar
    Scalar yank_scalar;             // product of the R3 factors alone
    std::string residual;           // dots left below the outputs
    std::vector<std::string> stuck;
    std::string correction;
    std::string correction_level;   // hierarchy class (single-gate only)
    double fidelity = 0;            // worst over the trials
    double agreement = 0;           // worst |diagram - simulator|
    double soundness = 0;           // |evaluate(normal form) - evaluate(diagram)|
    bool pass = false;
};

struct ProtocolReport {
    std::string protocol;
    size_t trials = 0;
    std::vector<BranchRecord> branches;
    bool pass = false;

    std::string to_text() const;
    std::string to_json() const;
};

struct OutcomePolicy {
    enum class Mode { kAll, kFixed, kSampled };
    Mode mode = Mode::kAll;
    std::vector<Outcome> fixed;
    size_t shots = 1;

    /// "all", "sample", or a bit string with two bits per measurement.
    static OutcomePolicy parse(std::string_view text, size_t shots = 1);
};

/// Runs the protocol on `trials` random inputs per branch: simulate,
/// normalize the diagram, correct, and compare with the target.
ProtocolReport run_protocol(const ProtocolSpec &spec, const OutcomePolicy &policy, SplitMix64 &rng,
                            size_t trials = 1, double tol = kTolerance);

/// A random normalized n-qubit state.
ComplexVector random_state(size_t num_qubits, SplitMix64 &rng);

}  // namespace tlc

#endif
