// Copyright 2026 The qcorr Authors
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

/** @file
 * Fixed-size complex linear algebra for one- and two-qubit operators.
 *
 * Two-qubit basis ordering is {|00>, |01>, |10>, |11>}, i.e. index 2a + b
 * for qubit A in state a and qubit B in state b.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "qcorr/tolerances.hpp"

namespace qcorr {

using cplx = std::complex<double>;

/// Dense N x N complex matrix stored row-major. Default-constructed to zero.
template <std::size_t N>
class CMatrix {
   public:
    static constexpr std::size_t dim = N;

    constexpr CMatrix() : data_{} {}

    static CMatrix identity() {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix diagonal(const std::array<cplx, N> &diag) {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = diag[i];
        return m;
    }

    cplx &operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
    const cplx &operator()(std::size_t row, std::size_t col) const { return data_[row * N + col]; }

    CMatrix adjoint() const {
        CMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    CMatrix conjugate() const {
        CMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.data_[k] = std::conj(data_[k]);
        return r;
    }

    CMatrix transpose() const {
        CMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto &z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    /// Largest |m_ij - conj(m_ji)|.
    double hermitian_defect() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }

    bool is_finite() const {
        for (const auto &z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    CMatrix &operator+=(const CMatrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
        return *this;
    }
    CMatrix &operator-=(const CMatrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
        return *this;
    }
    CMatrix &operator*=(cplx s) {
        for (auto &z : data_) z *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b) {
        CMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const CMatrix &, const CMatrix &) = default;

   private:
    std::array<cplx, N * N> data_;
};

using ComplexMatrix2 = CMatrix<2>;
using ComplexMatrix4 = CMatrix<4>;

/// Entrywise max-abs comparison.
template <std::size_t N>
bool approx_equal(const CMatrix<N> &a, const CMatrix<N> &b, double tol = Tolerances::compare) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol) return false;
    return true;
}

template <std::size_t N>
double max_abs_difference(const CMatrix<N> &a, const CMatrix<N> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

/// Real 3 x 3 matrix, row-major.
struct RealMatrix3 {
    std::array<double, 9> entries{};

    double &operator()(std::size_t row, std::size_t col) { return entries[row * 3 + col]; }
    double operator()(std::size_t row, std::size_t col) const { return entries[row * 3 + col]; }

    static RealMatrix3 identity() {
        RealMatrix3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static RealMatrix3 diagonal(double a, double b, double c) {
        RealMatrix3 m;
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        return m;
    }

    double determinant() const;
};

/// Hermitian matrix with unit trace and nonnegative spectrum, checked on construction.
template <std::size_t N>
class DensityMatrix {
   public:
    /// Throws InvalidDensityMatrix if m is not Hermitian within Tolerances::hermitian,
    /// its trace differs from one by more than Tolerances::trace, or an eigenvalue
    /// is below Tolerances::min_eigenvalue.
    explicit DensityMatrix(const CMatrix<N> &m);

    const CMatrix<N> &matrix() const { return m_; }
    const cplx &operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

   private:
    CMatrix<N> m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

/// Eigenvalues in descending order with matching eigenvectors as columns.
template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values;
    CMatrix<N> vectors;
};

namespace pauli {
ComplexMatrix2 identity();
ComplexMatrix2 x();
ComplexMatrix2 y();
ComplexMatrix2 z();
}  // namespace pauli

/// Kronecker product; a(0,0) * b fills the top-left block.
ComplexMatrix4 kron(const ComplexMatrix2 &a, const ComplexMatrix2 &b);

/// Cyclic complex Jacobi. Throws NotHermitian if the input's asymmetry exceeds
/// Tolerances::eigen_hermitian. Instantiated for N = 2, 3, 4.
template <std::size_t N>
EigenSystem<N> hermitian_eigen(const CMatrix<N> &h);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const CMatrix<N> &h) {
    return hermitian_eigen(h).values;
}

/// Singular values, descending, by one-sided Jacobi. Keeps small singular values
/// accurate to roughly eps * ||m|| in absolute terms. Instantiated for N = 2, 4.
template <std::size_t N>
std::array<double, N> singular_values(const CMatrix<N> &m);

/// Singular values of a real 3 x 3 matrix via the eigenvalues of t^T t.
std::array<double, 3> singular_values_3(const RealMatrix3 &t);

/// Transpose on the second qubit: out(ab, a'b') = in(ab', a'b).
ComplexMatrix4 partial_transpose_b(const ComplexMatrix4 &m);
ComplexMatrix4 partial_transpose_b(const DensityMatrix4 &rho);

/// rho_A = Tr_B rho.
DensityMatrix2 reduced_a(const DensityMatrix4 &rho);
/// rho_B = Tr_A rho.
DensityMatrix2 reduced_b(const DensityMatrix4 &rho);

/// -sum p log2 p over a spectrum. Entries in [min_eigenvalue, 0) count as zero,
/// entries above one as one; anything more negative throws InvalidDensityMatrix.
double entropy_of_spectrum(std::span<const double> spectrum);

double von_neumann_entropy(const DensityMatrix4 &rho);
double von_neumann_entropy(const DensityMatrix2 &rho);

/// Closed-form spectrum of a 2 x 2 Hermitian matrix, descending.
std::array<double, 2> hermitian_eigenvalues_2x2(const ComplexMatrix2 &h);

}  // namespace qcorr
