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

#include "tlc/evaluate.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace tlc {

namespace {

// A dense tensor with one named qubit leg per index; legs[0] is the most
// significant bit of the flat index.
struct LabelledTensor {
    std::vector<std::string> legs;
    std::vector<Complex> data{Complex{1, 0}};

    size_t position(const std::string &leg) const {
        auto it = std::find(legs.begin(), legs.end(), leg);
        if (it == legs.end()) {
            throw std::logic_error("evaluate: leg '" + leg + "' is not open");
        }
        return static_cast<size_t>(it - legs.begin());
    }

    size_t bit(size_t pos) const { return legs.size() - 1 - pos; }

    void append(const std::vector<std::string> &new_legs, const std::vector<Complex> &v) {
        if (legs.size() + new_legs.size() > kMaxWorkingLegs) {
            throw ResourceError("evaluate: more than " + std::to_string(kMaxWorkingLegs) + " simultaneous wires");
        }
        std::vector<Complex> out(data.size() * v.size());
        for (size_t a = 0; a < data.size(); a++) {
            for (size_t b = 0; b < v.size(); b++) {
                out[a * v.size() + b] = data[a] * v[b];
            }
        }
        data = std::move(out);
        legs.insert(legs.end(), new_legs.begin(), new_legs.end());
    }

    // Applies m to the listed legs (first leg most significant in m).
    void apply(const ComplexMatrix &m, const std::vector<size_t> &positions) {
        size_t k = positions.size();
        size_t dim = size_t{1} << k;
        std::vector<size_t> bits;
        size_t mask = 0;
        for (size_t p : positions) {
            bits.push_back(bit(p));
            mask |= size_t{1} << bit(p);
        }
        auto spread = [&](size_t local) {
            size_t off = 0;
            for (size_t q = 0; q < k; q++) {
                if ((local >> (k - 1 - q)) & 1) {
                    off |= size_t{1} << bits[q];
                }
            }
            return off;
        };
        std::vector<size_t> offsets(dim);
        for (size_t l = 0; l < dim; l++) {
            offsets[l] = spread(l);
        }
        std::vector<Complex> in(dim), out(dim);
        for (size_t base = 0; base < data.size(); base++) {
            if (base & mask) {
                continue;
            }
            for (size_t l = 0; l < dim; l++) {
                in[l] = data[base | offsets[l]];
            }
            for (size_t r = 0; r < dim; r++) {
                Complex acc = 0;
                for (size_t c = 0; c < dim; c++) {
                    acc += m(r, c) * in[c];
                }
                out[r] = acc;
            }
            for (size_t l = 0; l < dim; l++) {
                data[base | offsets[l]] = out[l];
            }
        }
    }

    // Contracts two legs against (<00| + <11|)/sqrt2.
    void cap(size_t p, size_t q) {
        size_t bp = bit(p), bq = bit(q);
        size_t both = (size_t{1} << bp) | (size_t{1} << bq);
        std::vector<Complex> out(data.size() / 4);
        double s = 1 / std::sqrt(2.0);
        for (size_t idx = 0; idx < data.size(); idx++) {
            if (idx & both) {
                continue;
            }
            // Squeeze out the two contracted bit positions.
            size_t hi = std::max(bp, bq), lo = std::min(bp, bq);
            size_t r = idx;
            r = ((r >> (hi + 1)) << hi) | (r & ((size_t{1} << hi) - 1));
            r = ((r >> (lo + 1)) << lo) | (r & ((size_t{1} << lo) - 1));
            out[r] = (data[idx] + data[idx | both]) * s;
        }
        data = std::move(out);
        size_t first = std::max(p, q), second = std::min(p, q);
        legs.erase(legs.begin() + static_cast<std::ptrdiff_t>(first));
        legs.erase(legs.begin() + static_cast<std::ptrdiff_t>(second));
    }
};

int contraction_rank(NodeKind kind) {
    switch (kind) {
        case NodeKind::kCap:
            return 0;
        case NodeKind::kGate1:
        case NodeKind::kGate2:
            return 1;
        default:
            return 2;
    }
}

// Topological order that retires caps as early as possible and opens new
// wires (cups, kets) as late as possible to keep the working tensor small.
std::vector<size_t> contraction_order(const Diagram &d) {
    auto index = d.edge_index();
    std::vector<size_t> pending(d.nodes.size(), 0);
    for (size_t n = 0; n < d.nodes.size(); n++) {
        for (size_t s = 0; s < d.nodes[n].edges.size(); s++) {
            if (!d.nodes[n].slot_consumes(s)) {
                continue;
            }
            const auto &ends = index.at(d.nodes[n].edges[s]);
            if (ends.producer.has_value() && ends.producer->where == Port::Where::kNode) {
                pending[n]++;
            }
        }
    }
    auto later = [&](size_t a, size_t b) {
        int ra = contraction_rank(d.nodes[a].kind), rb = contraction_rank(d.nodes[b].kind);
        return ra != rb ? ra > rb : a > b;
    };
    std::priority_queue<size_t, std::vector<size_t>, decltype(later)> ready(later);
    for (size_t n = 0; n < d.nodes.size(); n++) {
        if (pending[n] == 0) {
            ready.push(n);
        }
    }
    std::vector<size_t> order;
    while (!ready.empty()) {
        size_t n = ready.top();
        ready.pop();
        order.push_back(n);
        for (size_t s = 0; s < d.nodes[n].edges.size(); s++) {
            if (d.nodes[n].slot_consumes(s)) {
                continue;
            }
            const auto &ends = index.at(d.nodes[n].edges[s]);
            if (ends.consumer.has_value() && ends.consumer->where == Port::Where::kNode) {
                if (--pending[ends.consumer->node] == 0) {
                    ready.push(ends.consumer->node);
                }
            }
        }
    }
    return order;
}

}  // namespace

ComplexMatrix evaluate(const Diagram &d) {
    require_valid(d);
    size_t n_in = d.inputs.size(), n_out = d.outputs.size();
    if (n_in + n_out > kMaxOpenLegs) {
        throw ResourceError("evaluate: " + std::to_string(n_in + n_out) + " open legs exceeds the limit of " +
                            std::to_string(kMaxOpenLegs));
    }

    // Start from the identity: one "#k" bra leg paired with each input wire.
    LabelledTensor t;
    const std::vector<Complex> delta{1, 0, 0, 1};
    for (size_t k = 0; k < n_in; k++) {
        t.append({"#" + std::to_string(k), d.inputs[k]}, delta);
    }
    const double s = 1 / std::sqrt(2.0);
    for (size_t idx : contraction_order(d)) {
        const Node &n = d.nodes[idx];
        switch (n.kind) {
            case NodeKind::kCup:
                t.append({n.edges[0], n.edges[1]}, {s, 0, 0, s});
                break;
            case NodeKind::kKet0:
                t.append({n.edges[0]}, {1, 0});
                break;
            case NodeKind::kCap:
                t.cap(t.position(n.edges[0]), t.position(n.edges[1]));
                break;
            case NodeKind::kGate1: {
                size_t p = t.position(n.edges[0]);
                t.apply(n.gate.matrix(), {p});
                t.legs[p] = n.edges[1];
                break;
            }
            case NodeKind::kGate2: {
                size_t p0 = t.position(n.edges[0]);
                size_t p1 = t.position(n.edges[1]);
                t.apply(n.box.matrix(), {p0, p1});
                t.legs[p0] = n.edges[2];
                t.legs[p1] = n.edges[3];
                break;
            }
        }
    }

    std::vector<size_t> in_bits(n_in), out_bits(n_out);
    for (size_t k = 0; k < n_in; k++) {
        in_bits[k] = t.bit(t.position("#" + std::to_string(k)));
    }
    for (size_t k = 0; k < n_out; k++) {
        out_bits[k] = t.bit(t.position(d.outputs[k]));
    }
    if (t.legs.size() != n_in + n_out) {
        throw std::logic_error("evaluate: unexpected open legs after contraction");
    }
    ComplexMatrix result(size_t{1} << n_out, size_t{1} << n_in);
    Complex scale = d.scalar.value();
    for (size_t idx = 0; idx < t.data.size(); idx++) {
        size_t r = 0, c = 0;
        for (size_t k = 0; k < n_out; k++) {
            r = (r << 1) | ((idx >> out_bits[k]) & 1);
        }
        for (size_t k = 0; k < n_in; k++) {
            c = (c << 1) | ((idx >> in_bits[k]) & 1);
        }
        result(r, c) = t.data[idx] * scale;
    }
    return result;
}

ComplexVector evaluate_on(const Diagram &d, const ComplexVector &input) {
    return evaluate(d) * input;
}

}  // namespace tlc
