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

#include "tlc/gate_expr.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "tlc/gates.h"

namespace tlc {

namespace {

ComplexMatrix named_matrix(NamedGate g) {
    switch (g) {
        case NamedGate::kX:
            return gates::X();
        case NamedGate::kZ:
            return gates::Z();
        case NamedGate::kH:
            return gates::H();
        case NamedGate::kS:
            return gates::S();
        case NamedGate::kT:
            return gates::T();
    }
    throw std::logic_error("unreachable");
}

// X, Z, H are real and symmetric; S, T are diagonal (symmetric) and complex.
bool is_real_symmetric(NamedGate g) {
    return g == NamedGate::kX || g == NamedGate::kZ || g == NamedGate::kH;
}

const char *named_str(NamedGate g) {
    switch (g) {
        case NamedGate::kX:
            return "X";
        case NamedGate::kZ:
            return "Z";
        case NamedGate::kH:
            return "H";
        case NamedGate::kS:
            return "S";
        case NamedGate::kT:
            return "T";
    }
    return "?";
}

GateFactor apply_modifiers(GateFactor f, bool transpose, bool conj) {
    if (f.name.has_value()) {
        if (!is_real_symmetric(*f.name) && conj) {
            f.dagger = !f.dagger;
        }
        return f;
    }
    if (transpose) {
        f.literal = tlc::transpose(f.literal);
    }
    if (conj) {
        f.literal = tlc::conjugate(f.literal);
    }
    return f;
}

bool cancels(const GateFactor &a, const GateFactor &b) {
    if (!a.name.has_value() || !b.name.has_value() || *a.name != *b.name) {
        return false;
    }
    if (is_real_symmetric(*a.name)) {
        return true;  // X, Z, H are involutions.
    }
    return a.dagger != b.dagger;
}

}  // namespace

ComplexMatrix GateFactor::matrix() const {
    if (name.has_value()) {
        ComplexMatrix m = named_matrix(*name);
        return dagger ? tlc::dagger(m) : m;
    }
    return literal;
}

bool GateFactor::operator==(const GateFactor &other) const {
    if (name != other.name) {
        return false;
    }
    if (name.has_value()) {
        return dagger == other.dagger;
    }
    return literal == other.literal;
}

GateExpr GateExpr::named(NamedGate g, bool dagger) {
    GateExpr e;
    GateFactor f;
    f.name = g;
    f.dagger = dagger && !is_real_symmetric(g);
    e.factors_.push_back(f);
    return e;
}

GateExpr GateExpr::literal(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("gate literal must be 2x2");
    }
    GateExpr e;
    GateFactor f;
    f.literal = m;
    e.factors_.push_back(f);
    return e;
}

GateExpr GateExpr::pauli(bool x, bool z) {
    GateExpr e;
    if (x) {
        e = e * named(NamedGate::kX);
    }
    if (z) {
        e = e * named(NamedGate::kZ);
    }
    return e;
}

ComplexMatrix GateExpr::matrix() const {
    ComplexMatrix out = gates::I();
    for (const auto &f : factors_) {
        out = out * f.matrix();
    }
    return out;
}

GateExpr GateExpr::transpose() const {
    GateExpr out;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        out.factors_.push_back(apply_modifiers(*it, true, false));
    }
    out.simplify();
    return out;
}

GateExpr GateExpr::conjugate() const {
    GateExpr out;
    for (const auto &f : factors_) {
        out.factors_.push_back(apply_modifiers(f, false, true));
    }
    out.simplify();
    return out;
}

GateExpr GateExpr::dagger() const {
    return transpose().conjugate();
}

GateExpr GateExpr::then_after(const GateExpr &other) const {
    GateExpr out = *this;
    out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
    out.simplify();
    return out;
}

void GateExpr::simplify() {
    std::vector<GateFactor> stack;
    for (auto &f : factors_) {
        if (!stack.empty() && cancels(stack.back(), f)) {
            stack.pop_back();
        } else {
            stack.push_back(std::move(f));
        }
    }
    factors_ = std::move(stack);
}

std::optional<PauliString> GateExpr::as_pauli(double tol) const {
    return PauliString::from_matrix(matrix(), tol);
}

std::string GateExpr::str() const {
    if (factors_.empty()) {
        return "I";
    }
    std::string out;
    for (size_t k = 0; k < factors_.size(); k++) {
        if (k > 0) {
            out += ".";
        }
        const auto &f = factors_[k];
        if (f.name.has_value()) {
            out += named_str(*f.name);
            if (f.dagger) {
                out += "'";
            }
        } else {
            out += "mat2(";
            for (size_t e = 0; e < 4; e++) {
                out += (e ? "," : "") + format_complex_literal(f.literal(e / 2, e % 2));
            }
            out += ")";
        }
    }
    return out;
}

// ----------------------------------------------------------------- parsing

namespace {

class ExprParser {
   public:
    explicit ExprParser(std::string_view text) : text_(text) {
    }

    GateExpr parse_all() {
        GateExpr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string &why) {
        throw std::invalid_argument("bad gate expression '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool eat(std::string_view token) {
        skip_space();
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    GateExpr parse_expr() {
        GateExpr e = parse_term();
        while (eat(".")) {
            e = e * parse_term();
        }
        return e;
    }

    GateExpr parse_term() {
        GateExpr e = parse_primary();
        while (true) {
            if (eat("'")) {
                e = e.dagger();
            } else if (eat("^T")) {
                e = e.transpose();
            } else if (eat("^*")) {
                e = e.conjugate();
            } else {
                return e;
            }
        }
    }

    GateExpr parse_primary() {
        skip_space();
        if (eat("(")) {
            GateExpr e = parse_expr();
            if (!eat(")")) {
                fail("expected ')'");
            }
            return e;
        }
        if (eat("mat2(")) {
            std::vector<Complex> entries;
            for (int k = 0; k < 4; k++) {
                skip_space();
                size_t end = text_.find_first_of(",)", pos_);
                if (end == std::string_view::npos) {
                    fail("unterminated mat2");
                }
                try {
                    entries.push_back(parse_complex(text_.substr(pos_, end - pos_)));
                } catch (const std::invalid_argument &ex) {
                    fail(ex.what());
                }
                pos_ = end;
                if (!eat(k < 3 ? "," : ")")) {
                    fail(k < 3 ? "expected ','" : "expected ')'");
                }
            }
            ComplexMatrix m(2, 2, entries);
            if (!is_unitary(m, 1e-9)) {
                fail("mat2 literal is not unitary");
            }
            return GateExpr::literal(m);
        }
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        std::string_view word = text_.substr(start, pos_ - start);
        if (word == "I") {
            return GateExpr();
        }
        if (word == "X") {
            return GateExpr::named(NamedGate::kX);
        }
        if (word == "Z") {
            return GateExpr::named(NamedGate::kZ);
        }
        if (word == "H") {
            return GateExpr::named(NamedGate::kH);
        }
        if (word == "S") {
            return GateExpr::named(NamedGate::kS);
        }
        if (word == "T") {
            return GateExpr::named(NamedGate::kT);
        }
        pos_ = start;
        if (word.empty()) {
            fail("expected a gate name");
        }
        fail("unknown gate name '" + std::string(word) + "' (expected I, X, Z, H, S, T or mat2(...))");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

GateExpr GateExpr::parse(std::string_view text) {
    return ExprParser(text).parse_all();
}

// -------------------------------------------------------- two-qubit boxes

TwoQubitGate TwoQubitGate::parse(std::string_view text) {
    if (text == "cnot" || text == "cnot(0)" || text == "CNOT") {
        return cnot(0);
    }
    if (text == "cnot(1)") {
        return cnot(1);
    }
    if (text == "cz" || text == "CZ") {
        return cz();
    }
    if (text.starts_with("cu(") && text.ends_with(")")) {
        return cu(GateExpr::parse(text.substr(3, text.size() - 4)));
    }
    throw std::invalid_argument("unknown two-qubit gate '" + std::string(text) +
                                "' (expected cnot, cnot(1), cz or cu(<expr>))");
}

ComplexMatrix TwoQubitGate::matrix() const {
    switch (kind) {
        case Kind::kCnot:
            return control_slot == 0 ? gates::CNOT() : gates::CNOT_reversed();
        case Kind::kCz:
            return gates::CZ();
        case Kind::kCu:
            return gates::controlled(u.matrix());
    }
    throw std::logic_error("unreachable");
}

std::string TwoQubitGate::str() const {
    switch (kind) {
        case Kind::kCnot:
            return control_slot == 0 ? "cnot" : "cnot(1)";
        case Kind::kCz:
            return "cz";
        case Kind::kCu:
            return "cu(" + u.str() + ")";
    }
    return "?";
}

// ------------------------------------------------------- complex literals

Complex parse_complex(std::string_view raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text += c;
        }
    }
    auto fail = [&]() -> Complex { throw std::invalid_argument("bad complex literal '" + std::string(raw) + "'"); };
    if (text.empty()) {
        return fail();
    }
    auto parse_real = [&](const std::string &s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        char *end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size()) {
            fail();
        }
        return v;
    };
    char last = text.back();
    if (last != 'j' && last != 'i') {
        return checked_complex({parse_real(text), 0});
    }
    std::string body = text.substr(0, text.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return checked_complex({0, parse_real(body)});
    }
    std::string re = body.substr(0, split);
    if (re.empty() || re == "+" || re == "-") {
        fail();
    }
    return checked_complex({parse_real(re), parse_real(body.substr(split))});
}

std::string format_complex_literal(Complex z) {
    char buf[80];
    if (z.imag() == 0) {
        std::snprintf(buf, sizeof(buf), "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
    }
    return buf;
}

}  // namespace tlc
