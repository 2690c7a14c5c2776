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

#ifndef TLC_REWRITE_H
#define TLC_REWRITE_H

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/diagram.h"

namespace tlc {

enum class Rule { kSlideCup, kSlideCap, kYank, kFuse, kPush, kCommute };

/// "R1_slide_cup", "R2_slide_cap", "R3_yank", "R4_fuse",
/// "R5_push_through_box", "R6_commute".
std::string_view rule_name(Rule rule);
Rule parse_rule(std::string_view name);

/// A rule together with the node ids it acts on:
///   R1 [cup, dot]     dot sitting on a cup leg moves to the other leg, transposed
///   R2 [cap, dot]     dot feeding a cap leg moves to the other leg, transposed
///   R3 [cup, cap]     cup and cap sharing a wire become one wire (times 1/2);
///                     a closed loop with at most one dot U becomes tr(U)/2
///   R4 [lower, upper] two consecutive dots become one
///   R5 [dot, box]     Pauli dot on a box input reappears on the box outputs
///   R6 [lower, upper] two adjacent commuting boxes swap order
struct RuleSite {
    Rule rule;
    std::vector<std::string> locus;
};

class RewriteError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Rewritten {
    Diagram diagram;
    Scalar delta;  // factor moved into the diagram scalar
};

/// Applies one rule at the given locus. Throws RewriteError when the locus
/// does not match the rule's pattern.
Rewritten apply_rule(const Diagram &d, const RuleSite &site);

/// Lexicographic termination measure of the normalization strategy.
struct Measure {
    size_t cups_and_caps = 0;
    size_t dots = 0;        // only counted while a zig-zag remains
    size_t focus_dots = 0;  // dots on the zig-zag currently being straightened
    uint64_t weight = 0;    // sum over dots of 3^(boxes above the dot)
    auto operator<=>(const Measure &) const = default;
    std::string str() const;
};

Measure measure(const Diagram &d);

struct TraceStep {
    Rule rule;
    std::vector<std::string> locus;
    Scalar delta;
    /// "<step#> <rule> <locus> scalar*=<coeff>,<sqrt2_exp>"
    std::string str(size_t step) const;
};

using RewriteTrace = std::vector<TraceStep>;

struct NormalForm {
    Diagram diagram;
    RewriteTrace trace;
    std::vector<std::string> stuck;  // loci where a non-Pauli dot met a box
    bool budget_exhausted = false;
};

/// Straightens every cup/cap zig-zag, fuses dots and pushes Pauli dots
/// forward through boxes. Never applies R6. Stops after 10*(node count)^2
/// steps at most.
NormalForm normalize(const Diagram &d);

/// Re-applies a trace; throws RewriteError if a step does not match or its
/// scalar factor differs from the recorded one.
Diagram replay(const Diagram &d, const RewriteTrace &trace);

struct ResidualDot {
    std::string node;
    std::string in;
    std::string out;
    std::string gate;
};

std::vector<ResidualDot> residual_dots(const Diagram &d);

struct VerifyReport {
    std::string mode;  // "self" (original vs normal form) or "equation" (lhs vs rhs)
    bool success = false;
    double deviation = 0;
    Scalar scalar;
    std::vector<ResidualDot> residual;
    RewriteTrace trace;
    std::vector<std::string> stuck;
    Diagram normal_form;

    std::string to_json() const;
    std::string to_text() const;
};

/// Normalizes d and compares the normal form against d with the oracle.
VerifyReport verify(const Diagram &d, double tol = kTolerance);
/// Normalizes lhs and compares it against rhs with the oracle.
VerifyReport verify_equation(const Diagram &lhs, const Diagram &rhs, double tol = kTolerance);
/// One diagram: self check. Two diagrams: equation check.
VerifyReport verify_document(const std::vector<Diagram> &diagrams, double tol = kTolerance);

}  // namespace tlc

#endif
