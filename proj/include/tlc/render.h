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

#ifndef TLC_RENDER_H
#define TLC_RENDER_H

#include <string>

#include "tlc/diagram.h"

namespace tlc {

/// Monospaced picture of a diagram with time running upward. Each wire owns
/// a column (inputs first, then wires in the order nodes create them) and a
/// column is never handed to a second wire.
///
///   \___/    cup          /‾‾‾\    cap
///   *[X.Z]   dot          ∇        |0> preparation
///   *──⊕     cnot         *──*     cz          *──[U]   cu(U)
std::string render_ascii(const Diagram &d);

}  // namespace tlc

#endif
