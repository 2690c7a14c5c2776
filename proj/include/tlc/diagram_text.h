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

#ifndef TLC_DIAGRAM_TEXT_H
#define TLC_DIAGRAM_TEXT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/diagram.h"

namespace tlc {

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, size_t column, const std::string &message);
    size_t line() const { return line_; }
    size_t column() const { return column_; }

   private:
    size_t line_;
    size_t column_;
};

/// Parses a document holding one or more diagrams. Each `diagram <name>`
/// line starts a new diagram.
///
///   diagram <name>
///   scalar <re> <im> <sqrt2_exp>
///   input <edge> ...
///   output <edge> ...
///   node <id> cup <left> <right>
///   node <id> cap <left> <right>
///   node <id> gate1 <in> <out> gate=<expr>
///   node <id> gate2 <in0> <in1> <out0> <out1> gate=cnot|cnot(1)|cz|cu(<expr>)
///   node <id> ket0 <out>
///
/// Text after '#' is a comment.
std::vector<Diagram> parse_document(std::string_view text);
/// Parses a document that must contain exactly one diagram.
Diagram parse_diagram(std::string_view text);

/// Deterministic text form: nodes in topological order, ties broken by id.
std::string serialize(const Diagram &d);
std::string serialize_document(const std::vector<Diagram> &diagrams);

}  // namespace tlc

#endif
