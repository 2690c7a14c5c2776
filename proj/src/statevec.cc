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
#include <cstdio>
#include <stdexcept>

#include "tlc/gate_expr.h"
#include "tlc/gates.h"

namespace tlc {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split() {
    return SplitMix64(next());
}

QuantumState::QuantumState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.dim() < 2 || !is_power_of_two(amplitudes_.dim())) {
        throw std::invalid_argument("state dimension must be a power of two >= 2");
    }
    if (amplitudes_.num_qubits() > kMaxQubits) {
        throw std::invalid_argument("states are limited to 8 qubits");
    }
    if (std::abs(amplitudes_.norm() - 1) > kTolerance) {
        throw std::invalid_argument("state is not normalized");
    }
}

QuantumState QuantumState::zero(size_t num_qubits) {
    return QuantumState(ComplexVector::basis(size_t{1} << num_qubits, 0));
}

QuantumState QuantumState::apply_gate(const ComplexMatrix &g, std::span<const size_t> targets) const {
    size_t n = num_qubits();
    if (!g.is_square() || g.rows() != (size_t{1} << targets.size())) {
        throw std::invalid_argument("gate size does not match the number of targets");
    }
    for (size_t k = 0; k < targets.size(); k++) {
        if (targets[k] >= n) {
            throw std::out_of_range("target qubit " + std::to_string(targets[k]) + " out of range");
        }
        for (size_t m = 0; m < k; m++) {
            if (targets[m] == targets[k]) {
                throw std::invalid_argument("targets are not distinct");
            }
        }
    }
    if (!is_unitary(g)) {
        throw std::invalid_argument("gate is not unitary");
    }
    ComplexVector out = embed(g, targets, n) * amplitudes_;
    return QuantumState(out.normalized());
}

QuantumState QuantumState::tensor(const QuantumState &other) const {
    return QuantumState(tlc::tensor(amplitudes_, other.amplitudes_));
}

namespace {

size_t bit_of(size_t index, size_t q, size_t n) {
    return (index >> (n - 1 - q)) & 1;
}

// Removes the bits of q1 and q2 from an index.
size_t squeeze(size_t index, size_t q1, size_t q2, size_t n) {
    size_t out = 0;
    for (size_t q = 0; q < n; q++) {
        if (q != q1 && q != q2) {
            out = (out << 1) | bit_of(index, q, n);
        }
    }
    return out;
}

MeasurementRecord project(const QuantumState &s, size_t q1, size_t q2, Outcome outcome, bool retain) {
    size_t n = s.num_qubits();
    if (q1 == q2) {
        throw std::invalid_argument("measured qubits must differ");
    }
    if (q1 >= n || q2 >= n) {
        throw std::out_of_range("measured qubit out of range");
    }
    ComplexVector bell = gates::bell(outcome.i, outcome.j);
    const ComplexVector &amp = s.amplitudes();
    ComplexVector rest(size_t{1} << (n - 2));
    for (size_t k = 0; k < amp.dim(); k++) {
        size_t pair = 2 * bit_of(k, q1, n) + bit_of(k, q2, n);
        rest[squeeze(k, q1, q2, n)] += std::conj(bell[pair]) * amp[k];
    }
    MeasurementRecord r;
    r.q1 = q1;
    r.q2 = q2;
    r.outcome = outcome;
    r.retained = retain;
    double norm = rest.norm();
    r.probability = std::min(1.0, norm * norm);
    if (r.probability < kProbabilityFloor) {
        r.probability = 0;
        return r;
    }
    rest = rest * Complex{1 / norm, 0};
    if (!retain) {
        r.post_state = rest;
        return r;
    }
    ComplexVector full(amp.dim());
    for (size_t k = 0; k < amp.dim(); k++) {
        size_t pair = 2 * bit_of(k, q1, n) + bit_of(k, q2, n);
        full[k] = bell[pair] * rest[squeeze(k, q1, q2, n)];
    }
    r.post_state = full;
    return r;
}

}  // namespace

MeasurementRecord measure_bell_postselect(const QuantumState &s, size_t q1, size_t q2, Outcome outcome,
                                          bool retain) {
    MeasurementRecord r = project(s, q1, q2, outcome, retain);
    if (r.probability == 0) {
        throw std::domain_error("cannot postselect Bell outcome " + outcome.str() + ": probability below 1e-12");
    }
    return r;
}

std::vector<MeasurementRecord> measure_bell_enumerate(const QuantumState &s, size_t q1, size_t q2, bool retain) {
    std::vector<MeasurementRecord> out;
    for (unsigned k = 0; k < 4; k++) {
        out.push_back(project(s, q1, q2, Outcome::from_index(k), retain));
    }
    return out;
}

MeasurementRecord measure_bell_sample(const QuantumState &s, size_t q1, size_t q2, SplitMix64 &rng, bool retain) {
    auto records = measure_bell_enumerate(s, q1, q2, retain);
    double u = rng.uniform();
    double acc = 0;
    size_t last = 0;
    for (size_t k = 0; k < records.size(); k++) {
        if (records[k].probability == 0) {
            continue;
        }
        last = k;
        acc += records[k].probability;
        if (u < acc) {
            return records[k];
        }
    }
    return records[last];
}

double fidelity(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("fidelity: width mismatch");
    }
    return std::min(1.0, std::norm(a.inner(b)));
}

double fidelity(const QuantumState &a, const QuantumState &b) {
    return fidelity(a.amplitudes(), b.amplitudes());
}

ParsedState parse_state_literal(std::string_view text) {
    std::vector<Complex> entries;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        entries.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (entries.size() < 2 || !is_power_of_two(entries.size())) {
        throw std::invalid_argument("state literal needs 2^n amplitudes, got " + std::to_string(entries.size()));
    }
    ComplexVector v(entries);
    double norm = v.norm();
    if (norm == 0) {
        throw std::invalid_argument("state literal is the zero vector");
    }
    std::string warning;
    if (std::abs(norm - 1) > 1e-6) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "state literal has norm %.12g; normalized", norm);
        warning = buf;
    }
    return {QuantumState(v.normalized()), warning};
}

}  // namespace tlc
