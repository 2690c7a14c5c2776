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

#include "tlc/pauli.h"

#include <bit>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tlc/gates.h"

namespace tlc {

PauliString::PauliString(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliString width must be in [1, 32]");
    }
}

PauliString PauliString::single(size_t num_qubits, size_t q, bool x, bool z) {
    PauliString p(num_qubits);
    p.set(q, x, z);
    return p;
}

PauliString PauliString::from_outcome(Outcome o) {
    return single(1, 0, o.i, o.j);
}

void PauliString::set(size_t q, bool x, bool z) {
    if (q >= num_qubits_) {
        throw std::out_of_range("PauliString qubit out of range");
    }
    uint32_t bit = uint32_t{1} << q;
    x_bits_ = x ? (x_bits_ | bit) : (x_bits_ & ~bit);
    z_bits_ = z ? (z_bits_ | bit) : (z_bits_ & ~bit);
}

Complex PauliString::phase() const {
    static const Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[phase_ & 3];
}

PauliString PauliString::with_phase_exponent(unsigned k) const {
    PauliString out = *this;
    out.phase_ = k & 3;
    return out;
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw std::invalid_argument("PauliString width mismatch in multiply");
    }
    // (X^a Z^b)(X^c Z^d) = (-1)^{b c} X^{a+c} Z^{b+d}, and X^2 = Z^2 = 1.
    PauliString out(num_qubits_);
    out.x_bits_ = x_bits_ ^ other.x_bits_;
    out.z_bits_ = z_bits_ ^ other.z_bits_;
    unsigned swaps = static_cast<unsigned>(std::popcount(z_bits_ & other.x_bits_));
    out.phase_ = (phase_ + other.phase_ + 2 * swaps) & 3;
    return out;
}

PauliString PauliString::dagger() const {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^{xz} X^x Z^z.
    PauliString out = *this;
    unsigned swaps = static_cast<unsigned>(std::popcount(x_bits_ & z_bits_));
    out.phase_ = ((4 - phase_) + 2 * swaps) & 3;
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    int anti = std::popcount(x_bits_ & other.z_bits_) + std::popcount(z_bits_ & other.x_bits_);
    return anti % 2 == 0;
}

size_t PauliString::weight() const {
    return static_cast<size_t>(std::popcount(x_bits_ | z_bits_));
}

PauliString PauliString::factor(size_t q) const {
    return single(1, 0, x(q), z(q));
}

PauliString PauliString::tensor(const PauliString &other) const {
    if (num_qubits_ + other.num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("PauliString tensor too wide");
    }
    PauliString out(num_qubits_ + other.num_qubits_);
    out.x_bits_ = x_bits_ | (other.x_bits_ << num_qubits_);
    out.z_bits_ = z_bits_ | (other.z_bits_ << num_qubits_);
    out.phase_ = (phase_ + other.phase_) & 3;
    return out;
}

ComplexMatrix PauliString::to_matrix() const {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (size_t q = 0; q < num_qubits_; q++) {
        out = tlc::tensor(out, gates::pauli_xz(x(q), z(q)));
    }
    return out * phase();
}

std::optional<PauliMatch> match_pauli(const ComplexMatrix &m, double tol) {
    if (!m.is_square() || m.rows() < 2) {
        return std::nullopt;
    }
    size_t n = log2_exact(m.rows());
    if (n > 6) {
        throw std::invalid_argument("match_pauli: at most 6 qubits");
    }
    size_t count = size_t{1} << (2 * n);
    for (size_t code = 0; code < count; code++) {
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set(q, (code >> (2 * q)) & 1, (code >> (2 * q + 1)) & 1);
        }
        auto lambda = equal_upto_phase(m, p.to_matrix(), tol);
        if (lambda.has_value()) {
            return PauliMatch{p, snap_unit_phase(*lambda, 1e-9)};
        }
    }
    return std::nullopt;
}

std::optional<PauliString> PauliString::from_matrix(const ComplexMatrix &m, double tol) {
    auto match = match_pauli(m, tol);
    if (!match.has_value()) {
        return std::nullopt;
    }
    static const Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (unsigned k = 0; k < 4; k++) {
        if (match->phase == kPowers[k]) {
            return match->pauli.with_phase_exponent(k);
        }
    }
    return std::nullopt;
}

namespace {

std::string render(const PauliString &p, std::string_view sep) {
    static const char *kPrefix[] = {"", "i", "-", "-i"};
    std::string out = kPrefix[p.phase_exponent()];
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (q > 0) {
            out += sep;
        }
        if (!p.x(q) && !p.z(q)) {
            out += "I";
        } else {
            out += p.x(q) ? "X" : "";
            out += p.z(q) ? "Z" : "";
        }
    }
    return out;
}

}  // namespace

std::string PauliString::str() const {
    return render(*this, "⊗");
}

std::string PauliString::ascii_str() const {
    return render(*this, "x");
}

PauliString PauliString::from_str(std::string_view text) {
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("bad Pauli string '" + std::string(text) + "': " + why);
    };
    size_t pos = 0;
    unsigned phase = 0;
    if (text.starts_with("-i")) {
        phase = 3;
        pos = 2;
    } else if (text.starts_with("-")) {
        phase = 2;
        pos = 1;
    } else if (text.starts_with("+")) {
        pos = 1;
    } else if (text.starts_with("i")) {
        phase = 1;
        pos = 1;
    }
    std::vector<std::pair<bool, bool>> factors;
    static constexpr std::string_view kTensor = "⊗";
    while (true) {
        std::string_view rest = text.substr(pos);
        if (rest.starts_with("XZ")) {
            factors.emplace_back(true, true);
            pos += 2;
        } else if (rest.starts_with("X")) {
            factors.emplace_back(true, false);
            pos += 1;
        } else if (rest.starts_with("Z")) {
            factors.emplace_back(false, true);
            pos += 1;
        } else if (rest.starts_with("I")) {
            factors.emplace_back(false, false);
            pos += 1;
        } else {
            fail("expected one of I, X, Z, XZ at offset " + std::to_string(pos));
        }
        rest = text.substr(pos);
        if (rest.empty()) {
            break;
        }
        if (rest.starts_with(kTensor)) {
            pos += kTensor.size();
        } else if (rest.starts_with("x")) {
            pos += 1;
        } else {
            fail("expected a tensor separator at offset " + std::to_string(pos));
        }
    }
    if (factors.size() > kMaxQubits) {
        fail("too many factors");
    }
    PauliString out(factors.size());
    for (size_t q = 0; q < factors.size(); q++) {
        out.set(q, factors[q].first, factors[q].second);
    }
    return out.with_phase_exponent(phase);
}

// ------------------------------------------------------------ conjugation

namespace {

using ImageFn = std::function<PauliString(size_t q, bool is_x)>;

// Conjugation is a homomorphism, so the image of i^k prod_q X_q^x Z_q^z is the
// ordered product of generator images.
PauliString conjugate_with(const PauliString &p, const ImageFn &image) {
    PauliString out = PauliString(p.num_qubits()).with_phase_exponent(p.phase_exponent());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (p.x(q)) {
            out = out * image(q, true);
        }
        if (p.z(q)) {
            out = out * image(q, false);
        }
    }
    return out;
}

void check_pair(const PauliString &p, size_t a, size_t b) {
    if (a >= p.num_qubits() || b >= p.num_qubits() || a == b) {
        throw std::invalid_argument("conjugation: bad qubit pair");
    }
}

}  // namespace

PauliString conjugate_by_cnot(const PauliString &p, size_t control, size_t target) {
    check_pair(p, control, target);
    size_t n = p.num_qubits();
    return conjugate_with(p, [&](size_t q, bool is_x) {
        PauliString g = PauliString::single(n, q, is_x, !is_x);
        if (q == control && is_x) {
            g.set(target, true, false);
        } else if (q == target && !is_x) {
            g.set(control, false, true);
        }
        return g;
    });
}

PauliString conjugate_by_cz(const PauliString &p, size_t a, size_t b) {
    check_pair(p, a, b);
    size_t n = p.num_qubits();
    return conjugate_with(p, [&](size_t q, bool is_x) {
        PauliString g = PauliString::single(n, q, is_x, !is_x);
        if (is_x && (q == a || q == b)) {
            size_t other = q == a ? b : a;
            // X_a -> X_a Z_b and X_b -> Z_a X_b; both are +1 in X-before-Z order.
            g.set(other, false, true);
        }
        return g;
    });
}

PauliString conjugate_by_h(const PauliString &p, size_t q) {
    if (q >= p.num_qubits()) {
        throw std::invalid_argument("conjugation: qubit out of range");
    }
    size_t n = p.num_qubits();
    return conjugate_with(p, [&](size_t k, bool is_x) {
        if (k == q) {
            return PauliString::single(n, k, !is_x, is_x);
        }
        return PauliString::single(n, k, is_x, !is_x);
    });
}

PauliString conjugate_by_cnot(const PauliString &p) {
    if (p.num_qubits() != 2) {
        throw std::invalid_argument("conjugate_by_cnot: expected a 2-qubit string");
    }
    return conjugate_by_cnot(p, 0, 1);
}

PauliString conjugate_by_cz(const PauliString &p) {
    if (p.num_qubits() != 2) {
        throw std::invalid_argument("conjugate_by_cz: expected a 2-qubit string");
    }
    return conjugate_by_cz(p, 0, 1);
}

}  // namespace tlc
