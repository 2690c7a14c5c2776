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

#include "tlc/linalg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace tlc {

namespace {

void require_power_of_two(size_t n, const char *what) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument(std::string(what) + " must be a power of two, got " + std::to_string(n));
    }
}

}  // namespace

Complex checked_complex(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("non-finite complex value");
    }
    return z;
}

bool is_power_of_two(size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

size_t log2_exact(size_t n) {
    require_power_of_two(n, "dimension");
    size_t k = 0;
    while ((size_t{1} << k) < n) {
        k++;
    }
    return k;
}

// ---------------------------------------------------------------- vectors

ComplexVector::ComplexVector() : data_(Eigen::VectorXcd::Zero(1)) {
}

ComplexVector::ComplexVector(size_t dim) : data_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))) {
    require_power_of_two(dim, "vector dimension");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(static_cast<Eigen::Index>(entries.size())) {
    require_power_of_two(entries.size(), "vector dimension");
    for (size_t k = 0; k < entries.size(); k++) {
        data_(static_cast<Eigen::Index>(k)) = checked_complex(entries[k]);
    }
}

ComplexVector::ComplexVector(Eigen::VectorXcd data) : data_(std::move(data)) {
    require_power_of_two(dim(), "vector dimension");
}

ComplexVector ComplexVector::basis(size_t dim, size_t index) {
    ComplexVector v(dim);
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    v[index] = 1;
    return v;
}

double ComplexVector::norm() const {
    return data_.norm();
}

ComplexVector ComplexVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return ComplexVector(Eigen::VectorXcd(data_ / n));
}

Complex ComplexVector::inner(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("inner product dimension mismatch");
    }
    return data_.dot(other.data_);  // Eigen conjugates the left operand.
}

ComplexVector ComplexVector::operator+(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    return ComplexVector(Eigen::VectorXcd(data_ + other.data_));
}

ComplexVector ComplexVector::operator-(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    return ComplexVector(Eigen::VectorXcd(data_ - other.data_));
}

ComplexVector ComplexVector::operator*(Complex s) const {
    return ComplexVector(Eigen::VectorXcd(data_ * s));
}

double ComplexVector::max_abs_diff(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    return (data_ - other.data_).cwiseAbs().maxCoeff();
}

std::vector<Complex> ComplexVector::entries() const {
    return {data_.data(), data_.data() + data_.size()};
}

// --------------------------------------------------------------- matrices

ComplexMatrix::ComplexMatrix() : data_(Eigen::MatrixXcd::Zero(1, 1)) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols)
    : data_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))) {
    require_power_of_two(rows, "row count");
    require_power_of_two(cols, "column count");
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::span<const Complex> entries) : ComplexMatrix(rows, cols) {
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("matrix entry count does not match shape");
    }
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            (*this)(r, c) = checked_complex(entries[r * cols + c]);
        }
    }
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::span<const Complex>(entries.begin(), entries.size())) {
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
    require_power_of_two(rows(), "row count");
    require_power_of_two(cols(), "column count");
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    require_power_of_two(dim, "dimension");
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(n, n)));
}

ComplexMatrix ComplexMatrix::from_column(const ComplexVector &v) {
    return ComplexMatrix(Eigen::MatrixXcd(v.eigen()));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols() != other.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    return ComplexMatrix(Eigen::MatrixXcd(data_ * other.data_));
}

ComplexVector ComplexMatrix::operator*(const ComplexVector &v) const {
    if (cols() != v.dim()) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    return ComplexVector(Eigen::VectorXcd(data_ * v.eigen()));
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    return ComplexMatrix(Eigen::MatrixXcd(data_ * s));
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    if (rows() != other.rows() || cols() != other.cols()) {
        throw std::invalid_argument("matrix sum shape mismatch");
    }
    return ComplexMatrix(Eigen::MatrixXcd(data_ + other.data_));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    if (rows() != other.rows() || cols() != other.cols()) {
        throw std::invalid_argument("matrix difference shape mismatch");
    }
    return ComplexMatrix(Eigen::MatrixXcd(data_ - other.data_));
}

bool ComplexMatrix::operator==(const ComplexMatrix &other) const {
    return rows() == other.rows() && cols() == other.cols() && data_ == other.data_;
}

Complex ComplexMatrix::trace() const {
    return data_.trace();
}

ComplexVector ComplexMatrix::column(size_t c) const {
    return ComplexVector(Eigen::VectorXcd(data_.col(static_cast<Eigen::Index>(c))));
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (rows() != other.rows() || cols() != other.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    return (data_ - other.data_).cwiseAbs().maxCoeff();
}

double ComplexMatrix::max_abs() const {
    return data_.cwiseAbs().maxCoeff();
}

std::vector<Complex> ComplexMatrix::entries() const {
    std::vector<Complex> out;
    out.reserve(rows() * cols());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols(); c++) {
            out.push_back((*this)(r, c));
        }
    }
    return out;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows(); r++) {
        out << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < cols(); c++) {
            out << (c == 0 ? "" : ", ") << format_complex((*this)(r, c));
        }
        out << (r + 1 == rows() ? "]" : "\n");
    }
    return out.str();
}

// -------------------------------------------------------------- free ops

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    Eigen::MatrixXcd k = Eigen::kroneckerProduct(a.eigen(), b.eigen());
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r = 0; r < out.rows(); r++) {
        for (size_t c = 0; c < out.cols(); c++) {
            out(r, c) = k(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

ComplexVector tensor(const ComplexVector &a, const ComplexVector &b) {
    return tensor(ComplexMatrix::from_column(a), ComplexMatrix::from_column(b)).column(0);
}

ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (const auto &f : factors) {
        out = tensor(out, f);
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &m) {
    return conjugate(transpose(m));
}

namespace {

template <typename Get>
std::optional<Complex> phase_between(size_t n, Get get, double tol) {
    // get(k) -> (a_k, b_k)
    size_t best = 0;
    double best_mag = -1;
    for (size_t k = 0; k < n; k++) {
        double mag = std::abs(get(k).second);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    if (best_mag <= 0) {
        for (size_t k = 0; k < n; k++) {
            if (std::abs(get(k).first) > tol) {
                return std::nullopt;
            }
        }
        return Complex{1, 0};
    }
    auto [a_best, b_best] = get(best);
    Complex ratio = a_best / b_best;
    if (std::abs(ratio) == 0) {
        return std::nullopt;
    }
    Complex lambda = snap_unit_phase(ratio / std::abs(ratio));
    for (size_t k = 0; k < n; k++) {
        auto [a, b] = get(k);
        if (std::abs(a - lambda * b) > tol) {
            return std::nullopt;
        }
    }
    return lambda;
}

}  // namespace

std::optional<Complex> equal_upto_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("equal_upto_phase: shape mismatch");
    }
    size_t cols = a.cols();
    return phase_between(
        a.rows() * cols, [&](size_t k) { return std::pair{a(k / cols, k % cols), b(k / cols, k % cols)}; }, tol);
}

std::optional<Complex> equal_upto_phase(const ComplexVector &a, const ComplexVector &b, double tol) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("equal_upto_phase: dimension mismatch");
    }
    return phase_between(a.dim(), [&](size_t k) { return std::pair{a[k], b[k]}; }, tol);
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    return (m * dagger(m)).max_abs_diff(ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix embed(const ComplexMatrix &gate, std::span<const size_t> targets, size_t num_qubits) {
    size_t k = targets.size();
    if (!gate.is_square() || gate.rows() != (size_t{1} << k)) {
        throw std::invalid_argument("embed: gate size does not match target count");
    }
    for (size_t a = 0; a < k; a++) {
        if (targets[a] >= num_qubits) {
            throw std::out_of_range("embed: target out of range");
        }
        for (size_t b = a + 1; b < k; b++) {
            if (targets[a] == targets[b]) {
                throw std::invalid_argument("embed: duplicate target");
            }
        }
    }
    size_t dim = size_t{1} << num_qubits;
    auto bit_of = [&](size_t q) { return size_t{1} << (num_qubits - 1 - q); };
    size_t target_mask = 0;
    for (size_t q : targets) {
        target_mask |= bit_of(q);
    }
    auto local_index = [&](size_t full) {
        size_t idx = 0;
        for (size_t a = 0; a < k; a++) {
            idx = (idx << 1) | ((full & bit_of(targets[a])) ? 1 : 0);
        }
        return idx;
    };
    auto scatter = [&](size_t rest, size_t local) {
        size_t full = rest;
        for (size_t a = 0; a < k; a++) {
            if ((local >> (k - 1 - a)) & 1) {
                full |= bit_of(targets[a]);
            }
        }
        return full;
    };
    ComplexMatrix out(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        size_t rest = col & ~target_mask;
        size_t lc = local_index(col);
        for (size_t lr = 0; lr < gate.rows(); lr++) {
            Complex g = gate(lr, lc);
            if (g != Complex{0, 0}) {
                out(scatter(rest, lr), col) = g;
            }
        }
    }
    return out;
}

Complex snap_unit_phase(Complex z, double tol) {
    static const Complex kUnits[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (Complex u : kUnits) {
        if (std::abs(z - u) <= tol) {
            return u;
        }
    }
    return z;
}

std::string format_complex(Complex z) {
    auto fmt = [](double v) {
        if (std::abs(v) < 5e-13) {
            v = 0;
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    double re = std::abs(z.real()) < 5e-13 ? 0 : z.real();
    double im = std::abs(z.imag()) < 5e-13 ? 0 : z.imag();
    if (im == 0) {
        return fmt(re);
    }
    std::string ims = (im == 1) ? "" : (im == -1) ? "-" : fmt(im);
    if (re == 0) {
        return ims + "i";
    }
    if (im > 0) {
        return fmt(re) + "+" + ims + "i";
    }
    return fmt(re) + ims + "i";
}

}  // namespace tlc
