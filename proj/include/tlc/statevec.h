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

#ifndef TLC_STATEVEC_H
#define TLC_STATEVEC_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/linalg.h"
#include "tlc/pauli.h"

namespace tlc {

/// SplitMix64. Every draw is a pure function of (seed, counter), and split()
/// derives an independent stream, so shot loops can be reproduced exactly.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {
    }
    uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    SplitMix64 split();

   private:
    uint64_t state_;
};

/// A normalized pure state on at most 8 qubits; qubit 0 is the most
/// significant index bit.
class QuantumState {
   public:
    static constexpr size_t kMaxQubits = 8;

    /// Throws unless amplitudes has dimension 2^n (n <= 8) and unit norm.
    explicit QuantumState(ComplexVector amplitudes);
    static QuantumState zero(size_t num_qubits);

    size_t num_qubits() const { return amplitudes_.num_qubits(); }
    const ComplexVector &amplitudes() const { return amplitudes_; }

    /// g acts on targets (targets[0] is g's most significant qubit).
    QuantumState apply_gate(const ComplexMatrix &g, std::span<const size_t> targets) const;
    QuantumState apply_gate(const ComplexMatrix &g, std::initializer_list<size_t> targets) const {
        return apply_gate(g, std::span<const size_t>(targets.begin(), targets.size()));
    }
    QuantumState tensor(const QuantumState &other) const;

   private:
    ComplexVector amplitudes_;
};

struct MeasurementRecord {
    size_t q1 = 0;
    size_t q2 = 0;
    Outcome outcome;
    double probability = 0;
    bool retained = false;   // post_state keeps the pair in |psi(ij)>
    ComplexVector post_state;  // renormalized; unused when probability is 0
};

inline constexpr double kProbabilityFloor = 1e-12;

/// Projects qubits (q1, q2) onto |psi(ij)> = (1 (x) X^i Z^j)|psi(00)>.
/// Throws std::domain_error when the outcome's probability is below the floor.
MeasurementRecord measure_bell_postselect(const QuantumState &s, size_t q1, size_t q2, Outcome outcome,
                                          bool retain = false);
/// All four records in outcome order 00, 01, 10, 11. Impossible outcomes
/// carry probability 0.
std::vector<MeasurementRecord> measure_bell_enumerate(const QuantumState &s, size_t q1, size_t q2,
                                                      bool retain = false);
/// Draws one outcome by the Born rule.
MeasurementRecord measure_bell_sample(const QuantumState &s, size_t q1, size_t q2, SplitMix64 &rng,
                                      bool retain = false);

/// |<a|b>|^2.
double fidelity(const ComplexVector &a, const ComplexVector &b);
double fidelity(const QuantumState &a, const QuantumState &b);

struct ParsedState {
    QuantumState state;
    std::string warning;  // set when the literal had to be renormalized
};

/// Comma-separated amplitudes "re+imj", big-endian qubit order.
ParsedState parse_state_literal(std::string_view text);

}  // namespace tlc

#endif
