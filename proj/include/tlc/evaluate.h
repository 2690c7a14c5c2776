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

#ifndef TLC_EVALUATE_H
#define TLC_EVALUATE_H

#include <stdexcept>

#include "tlc/diagram.h"
#include "tlc/linalg.h"

namespace tlc {

/// Raised when a diagram is too large for dense evaluation.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr size_t kMaxOpenLegs = 16;
inline constexpr size_t kMaxWorkingLegs = 22;

/// Contracts the diagram into the 2^outputs x 2^inputs matrix it denotes,
/// including the scalar. A cup is (|00>+|11>)/sqrt2, a cap its adjoint.
ComplexMatrix evaluate(const Diagram &d);

/// evaluate(d) applied to an input state.
ComplexVector evaluate_on(const Diagram &d, const ComplexVector &input);

}  // namespace tlc

#endif
