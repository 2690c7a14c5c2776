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

#ifndef TLC_SCALAR_H
#define TLC_SCALAR_H

#include <string>

#include "tlc/linalg.h"

namespace tlc {

/// An exact-exponent scalar: coeff * 2^(sqrt2_exp / 2).
///
/// Nonzero values are kept in canonical form with |coeff| in (2^-1/2, 1], so
/// powers of sqrt(2) always live in the integer exponent. Zero is stored as
/// coeff 0, exponent 0.
class Scalar {
   public:
    Scalar() = default;
    Scalar(Complex coeff, int sqrt2_exp = 0);

    static Scalar one() { return {}; }
    static Scalar half() { return Scalar(1, -2); }
    static Scalar inv_sqrt2() { return Scalar(1, -1); }
    static Scalar power_of_two(int k) { return Scalar(1, 2 * k); }

    Complex coeff() const { return coeff_; }
    int sqrt2_exp() const { return sqrt2_exp_; }
    bool is_zero() const { return coeff_ == Complex{0, 0}; }
    Complex value() const;

    Scalar operator*(const Scalar &other) const;
    Scalar &operator*=(const Scalar &other);
    bool operator==(const Scalar &other) const = default;

    /// e.g. "1/4", "-i/2", "1/sqrt2", "0.3+0.1i * 2^(-3/2)".
    std::string str() const;

   private:
    Complex coeff_{1, 0};
    int sqrt2_exp_ = 0;
};

}  // namespace tlc

#endif
