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

#ifndef TLC_TESTS_TEST_UTIL_H
#define TLC_TESTS_TEST_UTIL_H

#include <random>

#include <Eigen/QR>

#include "tlc/diagram.h"
#include "tlc/linalg.h"

namespace tlc::test_util {

inline ComplexVector random_state(size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexVector v(size_t{1} << num_qubits);
    for (size_t k = 0; k < v.dim(); k++) {
        v[k] = Complex{g(rng), g(rng)};
    }
    return v.normalized();
}

/// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline ComplexMatrix random_unitary(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            a(r, c) = Complex{g(rng), g(rng)};
        }
    }
    Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
    std::vector<Complex> entries;
    for (Eigen::Index r = 0; r < q.rows(); r++) {
        for (Eigen::Index c = 0; c < q.cols(); c++) {
            entries.push_back(q(r, c));
        }
    }
    return ComplexMatrix(dim, dim, entries);
}

struct RandomDiagramOptions {
    size_t max_cups = 5;
    size_t max_caps = 5;
    size_t max_boxes = 2;
    size_t max_open_legs = 4;
    bool pauli_dots_only = false;
};

/// Builds a random valid diagram by stacking cups, caps, dots and boxes on
/// a growing set of open wires.
inline Diagram random_diagram(std::mt19937_64 &rng, const RandomDiagramOptions &opt = {}) {
    static const char *kDots[] = {"I", "X", "Z", "X.Z", "H", "S", "T"};
    static const char *kBoxes[] = {"cnot", "cnot(1)", "cz", "cu(S)", "cu(H)"};
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    while (true) {
        Diagram d;
        d.name = "random";
        size_t edge_count = 0, node_count = 0;
        auto edge = [&] { return "e" + std::to_string(edge_count++); };
        auto id = [&](const char *prefix) { return prefix + std::to_string(node_count++); };
        std::vector<std::string> open;
        size_t n_in = pick(3);
        for (size_t k = 0; k < n_in; k++) {
            d.inputs.push_back(edge());
            open.push_back(d.inputs.back());
        }
        auto take = [&] {
            size_t k = pick(open.size());
            std::string e = open[k];
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
            return e;
        };
        size_t cups = 0, caps = 0, boxes = 0;
        size_t steps = 3 + pick(14);
        for (size_t s = 0; s < steps; s++) {
            switch (pick(4)) {
                case 0:
                    if (cups < opt.max_cups && open.size() < 7) {
                        std::string a = edge(), b = edge();
                        d.add(Node::cup(id("c"), a, b));
                        open.insert(open.begin() + static_cast<std::ptrdiff_t>(pick(open.size() + 1)), a);
                        open.insert(open.begin() + static_cast<std::ptrdiff_t>(pick(open.size() + 1)), b);
                        cups++;
                    }
                    break;
                case 1:
                    if (caps < opt.max_caps && open.size() >= 2) {
                        std::string a = take(), b = take();
                        d.add(Node::cap(id("k"), a, b));
                        caps++;
                    }
                    break;
                case 2:
                    if (!open.empty()) {
                        size_t k = pick(open.size());
                        std::string out = edge();
                        size_t choices = opt.pauli_dots_only ? 4 : 7;
                        d.add(Node::gate1(id("g"), open[k], out, GateExpr::parse(kDots[pick(choices)])));
                        open[k] = out;
                    }
                    break;
                case 3:
                    if (boxes < opt.max_boxes && open.size() >= 2) {
                        std::string a = take(), b = take();
                        std::string c = edge(), e = edge();
                        size_t choices = opt.pauli_dots_only ? 3 : 5;
                        d.add(Node::gate2(id("b"), a, b, c, e, TwoQubitGate::parse(kBoxes[pick(choices)])));
                        open.push_back(c);
                        open.push_back(e);
                        boxes++;
                    }
                    break;
            }
        }
        while (open.size() + n_in > opt.max_open_legs && open.size() >= 2 && caps < opt.max_caps) {
            std::string a = take(), b = take();
            d.add(Node::cap(id("k"), a, b));
            caps++;
        }
        if (open.size() + n_in > opt.max_open_legs) {
            continue;
        }
        d.outputs = open;
        return d;
    }
}

}  // namespace tlc::test_util

#endif
