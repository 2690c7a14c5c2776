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

#ifndef TLC_LINALG_H
#define TLC_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tlc {

using Complex = std::complex<double>;

/// Default tolerance for every numeric comparison in the library.
inline constexpr double kTolerance = 1e-10;

/// Throws std::invalid_argument if z has a NaN or infinite component.
Complex checked_complex(Complex z);

bool is_power_of_two(size_t n);
/// log2 of a power of two.
size_t log2_exact(size_t n);

class ComplexMatrix;

/// A column of 2^n complex amplitudes. Qubit 0 is the most significant bit
/// of the index (leftmost wire).
class ComplexVector {
   public:
    ComplexVector();
    explicit ComplexVector(size_t dim);
    ComplexVector(std::initializer_list<Complex> entries);
    explicit ComplexVector(std::vector<Complex> entries);

    /// Computational basis state |index> in a space of dimension dim.
    static ComplexVector basis(size_t dim, size_t index);

    size_t dim() const { return static_cast<size_t>(data_.size()); }
    size_t num_qubits() const { return log2_exact(dim()); }
    Complex operator[](size_t k) const { return data_(static_cast<Eigen::Index>(k)); }
    Complex &operator[](size_t k) { return data_(static_cast<Eigen::Index>(k)); }

    double norm() const;
    ComplexVector normalized() const;
    Complex inner(const ComplexVector &other) const;  // <this|other>
    ComplexVector operator+(const ComplexVector &other) const;
    ComplexVector operator-(const ComplexVector &other) const;
    ComplexVector operator*(Complex s) const;
    double max_abs_diff(const ComplexVector &other) const;
    std::vector<Complex> entries() const;

    const Eigen::VectorXcd &eigen() const { return data_; }

   private:
    friend class ComplexMatrix;
    explicit ComplexVector(Eigen::VectorXcd data);
    Eigen::VectorXcd data_;
};

/// Dense row-major-indexed complex matrix whose dimensions are powers of two.
class ComplexMatrix {
   public:
    ComplexMatrix();
    ComplexMatrix(size_t rows, size_t cols);
    /// Row-major entries.
    ComplexMatrix(size_t rows, size_t cols, std::span<const Complex> entries);
    ComplexMatrix(size_t rows, size_t cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix from_column(const ComplexVector &v);

    size_t rows() const { return static_cast<size_t>(data_.rows()); }
    size_t cols() const { return static_cast<size_t>(data_.cols()); }
    bool is_square() const { return rows() == cols(); }
    Complex operator()(size_t r, size_t c) const {
        return data_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    Complex &operator()(size_t r, size_t c) {
        return data_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexVector operator*(const ComplexVector &v) const;
    ComplexMatrix operator*(Complex s) const;
    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    bool operator==(const ComplexMatrix &other) const;

    Complex trace() const;
    ComplexVector column(size_t c) const;
    double max_abs_diff(const ComplexMatrix &other) const;
    double max_abs() const;
    std::vector<Complex> entries() const;  // row-major
    std::string str() const;

    const Eigen::MatrixXcd &eigen() const { return data_; }

   private:
    explicit ComplexMatrix(Eigen::MatrixXcd data);
    Eigen::MatrixXcd data_;
};

/// Kronecker product; a's indices become the high-order (leftmost) block.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor(const ComplexVector &a, const ComplexVector &b);
ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors);
ComplexMatrix dagger(const ComplexMatrix &m);
ComplexMatrix transpose(const ComplexMatrix &m);
ComplexMatrix conjugate(const ComplexMatrix &m);

/// The unit phase lambda with |a - lambda b|_max <= tol, if one exists.
/// lambda is read off the largest-magnitude entry of b.
std::optional<Complex> equal_upto_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kTolerance);
std::optional<Complex> equal_upto_phase(const ComplexVector &a, const ComplexVector &b, double tol = kTolerance);

bool is_unitary(const ComplexMatrix &m, double tol = kTolerance);

/// Lifts a 2^k x 2^k gate acting on `targets` (targets[0] most significant)
/// to the full n-qubit register.
ComplexMatrix embed(const ComplexMatrix &gate, std::span<const size_t> targets, size_t num_qubits);

/// Rounds phases within tol of {1, i, -1, -i} onto them exactly.
Complex snap_unit_phase(Complex z, double tol = 1e-12);

std::string format_complex(Complex z);

}  // namespace tlc

#endif
