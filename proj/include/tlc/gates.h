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

#ifndef TLC_GATES_H
#define TLC_GATES_H

#include "tlc/linalg.h"

namespace tlc::gates {

ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Z();
/// (X + Z) / sqrt(2).
ComplexMatrix H();
ComplexMatrix S();
ComplexMatrix T();

/// Control on the first (most significant) qubit.
ComplexMatrix CNOT();
/// Control on the second qubit, target on the first.
ComplexMatrix CNOT_reversed();
ComplexMatrix CZ();
/// |0><0| (x) 1 + |1><1| (x) u.
ComplexMatrix controlled(const ComplexMatrix &u);

/// X^x Z^z.
ComplexMatrix pauli_xz(bool x, bool z);

/// (|00> + |11>) / sqrt(2).
ComplexVector epr();
/// |psi(ij)> = (1 (x) X^i Z^j) |psi(00)>.
ComplexVector bell(bool i, bool j);
/// (|000> + |111>) / sqrt(2).
ComplexVector ghz();

}  // namespace tlc::gates

#endif
