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

#include "tlc/scalar.h"

#include <cmath>

namespace tlc {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kSlack = 1e-12;

}  // namespace

Scalar::Scalar(Complex coeff, int sqrt2_exp) : coeff_(checked_complex(coeff)), sqrt2_exp_(sqrt2_exp) {
    if (std::abs(coeff_) == 0) {
        coeff_ = 0;
        sqrt2_exp_ = 0;
        return;
    }
    while (std::abs(coeff_) > 1 + kSlack) {
        coeff_ *= kInvSqrt2;
        sqrt2_exp_ += 1;
    }
    while (std::abs(coeff_) <= kInvSqrt2 + kSlack) {
        coeff_ *= kSqrt2;
        sqrt2_exp_ -= 1;
    }
    double mag = std::abs(coeff_);
    if (std::abs(mag - 1) <= kSlack) {
        coeff_ = snap_unit_phase(coeff_ / mag);
    }
}

Complex Scalar::value() const {
    return coeff_ * std::pow(2.0, sqrt2_exp_ / 2.0);
}

Scalar Scalar::operator*(const Scalar &other) const {
    return Scalar(coeff_ * other.coeff_, sqrt2_exp_ + other.sqrt2_exp_);
}

Scalar &Scalar::operator*=(const Scalar &other) {
    *this = *this * other;
    return *this;
}

std::string Scalar::str() const {
    if (is_zero()) {
        return "0";
    }
    bool unit = std::abs(std::abs(coeff_) - 1) <= kSlack;
    std::string c = format_complex(coeff_);
    if (!unit) {
        return c + " * 2^(" + std::to_string(sqrt2_exp_) + "/2)";
    }
    std::string head = c == "1" ? "1" : c == "-1" ? "-1" : c;
    if (sqrt2_exp_ == 0) {
        return head;
    }
    if (sqrt2_exp_ < 0) {
        int e = -sqrt2_exp_;
        std::string den = (e % 2 == 0) ? std::to_string(1LL << (e / 2))
                                        : (e == 1 ? "sqrt2" : std::to_string(1LL << (e / 2)) + "sqrt2");
        if (head == "1") {
            return "1/" + den;
        }
        if (head == "-1") {
            return "-1/" + den;
        }
        return "(" + head + ")/" + den;
    }
    int e = sqrt2_exp_;
    std::string num = (e % 2 == 0) ? std::to_string(1LL << (e / 2))
                                    : (e == 1 ? "sqrt2" : std::to_string(1LL << (e / 2)) + "sqrt2");
    if (head == "1") {
        return num;
    }
    if (head == "-1") {
        return "-" + num;
    }
    return "(" + head + ")*" + num;
}

}  // namespace tlc
