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

#include "tlc/gates.h"

#include <cmath>
#include <numbers>

namespace tlc::gates {

namespace {
constexpr double kR = std::numbers::sqrt2 / 2;
}

ComplexMatrix I() {
    return ComplexMatrix::identity(2);
}

ComplexMatrix X() {
    return ComplexMatrix(2, 2, {0, 1, 1, 0});
}

ComplexMatrix Z() {
    return ComplexMatrix(2, 2, {1, 0, 0, -1});
}

ComplexMatrix H() {
    return ComplexMatrix(2, 2, {kR, kR, kR, -kR});
}

ComplexMatrix S() {
    return ComplexMatrix(2, 2, {1, 0, 0, Complex{0, 1}});
}

ComplexMatrix T() {
    return ComplexMatrix(2, 2, {1, 0, 0, Complex{kR, kR}});
}

ComplexMatrix controlled(const ComplexMatrix &u) {
    ComplexMatrix out = ComplexMatrix::identity(4);
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            out(2 + r, 2 + c) = u(r, c);
        }
    }
    return out;
}

ComplexMatrix CNOT() {
    return controlled(X());
}

ComplexMatrix CNOT_reversed() {
    ComplexMatrix out(4, 4);
    out(0, 0) = 1;
    out(3, 1) = 1;
    out(2, 2) = 1;
    out(1, 3) = 1;
    return out;
}

ComplexMatrix CZ() {
    return controlled(Z());
}

ComplexMatrix pauli_xz(bool x, bool z) {
    ComplexMatrix out = I();
    if (x) {
        out = out * X();
    }
    if (z) {
        out = out * Z();
    }
    return out;
}

ComplexVector epr() {
    return ComplexVector{kR, 0, 0, kR};
}

ComplexVector bell(bool i, bool j) {
    return tensor(I(), pauli_xz(i, j)) * epr();
}

ComplexVector ghz() {
    ComplexVector out(8);
    out[0] = kR;
    out[7] = kR;
    return out;
}

}  // namespace tlc::gates
