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

#include "qcorr/qmat.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

/// Unitary V acting on the (p, q) plane such that V^dag G V is diagonal in that
/// plane, for the Hermitian block G = [[alpha, g], [conj(g), beta]], g != 0.
/// The phase of g is removed first, then a real Jacobi rotation is applied.
struct PlaneRotation {
    cplx vpp, vpq, vqp, vqq;
};

PlaneRotation plane_rotation(double alpha, double beta, cplx g) {
    const double mag = std::abs(g);
    const cplx phase_conj = std::conj(g / mag);
    const double theta = (beta - alpha) / (2.0 * mag);
    double t;
    if (!std::isfinite(theta)) {
        t = 0.0;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    return {c, s, -s * phase_conj, c * phase_conj};
}

/// m <- m V on columns p, q.
template <std::size_t N>
void rotate_columns(CMatrix<N> &m, std::size_t p, std::size_t q, const PlaneRotation &v) {
    for (std::size_t k = 0; k < N; ++k) {
        const cplx mp = m(k, p);
        const cplx mq = m(k, q);
        m(k, p) = mp * v.vpp + mq * v.vqp;
        m(k, q) = mp * v.vpq + mq * v.vqq;
    }
}

/// m <- V^dag m on rows p, q.
template <std::size_t N>
void rotate_rows(CMatrix<N> &m, std::size_t p, std::size_t q, const PlaneRotation &v) {
    for (std::size_t k = 0; k < N; ++k) {
        const cplx mp = m(p, k);
        const cplx mq = m(q, k);
        m(p, k) = std::conj(v.vpp) * mp + std::conj(v.vqp) * mq;
        m(q, k) = std::conj(v.vpq) * mp + std::conj(v.vqq) * mq;
    }
}

template <std::size_t N>
double off_diagonal_norm(const CMatrix<N> &m) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

template <std::size_t N>
std::array<std::size_t, N> descending_order(const std::array<double, N> &values) {
    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

}  // namespace

double RealMatrix3::determinant() const {
    const auto &m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <std::size_t N>
DensityMatrix<N>::DensityMatrix(const CMatrix<N> &m) : m_(m) {
    if (!m.is_finite()) throw InvalidDensityMatrix("density matrix has non-finite entries");
    const double defect = m.hermitian_defect();
    if (defect > Tolerances::hermitian)
        throw InvalidDensityMatrix("density matrix not Hermitian (defect " + std::to_string(defect) + ")");
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > Tolerances::trace)
        throw InvalidDensityMatrix("density matrix trace " + std::to_string(tr.real()) + " != 1");
    const auto spectrum = hermitian_eigenvalues(m);
    if (spectrum.back() < Tolerances::min_eigenvalue)
        throw InvalidDensityMatrix("density matrix has negative eigenvalue " + std::to_string(spectrum.back()));
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

namespace pauli {
ComplexMatrix2 identity() { return ComplexMatrix2::identity(); }
ComplexMatrix2 x() {
    ComplexMatrix2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}
ComplexMatrix2 y() {
    ComplexMatrix2 m;
    m(0, 1) = cplx{0.0, -1.0};
    m(1, 0) = cplx{0.0, 1.0};
    return m;
}
ComplexMatrix2 z() { return ComplexMatrix2::diagonal({1.0, -1.0}); }
}  // namespace pauli

ComplexMatrix4 kron(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    ComplexMatrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

template <std::size_t N>
EigenSystem<N> hermitian_eigen(const CMatrix<N> &h) {
    if (!h.is_finite()) throw NotHermitian("matrix has non-finite entries");
    const double defect = h.hermitian_defect();
    if (defect > Tolerances::eigen_hermitian)
        throw NotHermitian("matrix asymmetry " + std::to_string(defect) + " exceeds tolerance");

    // Work on the exactly Hermitian part.
    CMatrix<N> a = (h + h.adjoint()) * cplx{0.5};
    CMatrix<N> v = CMatrix<N>::identity();
    const double threshold = Tolerances::jacobi_off_norm * std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < Tolerances::jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx g = a(p, q);
                if (g == cplx{}) continue;
                const auto rot = plane_rotation(a(p, p).real(), a(q, q).real(), g);
                rotate_columns(a, p, q, rot);
                rotate_rows(a, p, q, rot);
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, rot);
            }
        }
    }

    std::array<double, N> raw;
    for (std::size_t i = 0; i < N; ++i) raw[i] = a(i, i).real();
    const auto order = descending_order(raw);
    EigenSystem<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = raw[order[k]];
        for (std::size_t row = 0; row < N; ++row) out.vectors(row, k) = v(row, order[k]);
    }
    return out;
}

template EigenSystem<2> hermitian_eigen(const CMatrix<2> &);
template EigenSystem<3> hermitian_eigen(const CMatrix<3> &);
template EigenSystem<4> hermitian_eigen(const CMatrix<4> &);

template <std::size_t N>
std::array<double, N> singular_values(const CMatrix<N> &m) {
    CMatrix<N> a = m;
    constexpr double eps = 1e-15;
    for (int sweep = 0; sweep < Tolerances::jacobi_max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx g = 0.0;
                for (std::size_t k = 0; k < N; ++k) {
                    alpha += std::norm(a(k, p));
                    beta += std::norm(a(k, q));
                    g += std::conj(a(k, p)) * a(k, q);
                }
                if (g == cplx{} || std::abs(g) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                rotate_columns(a, p, q, plane_rotation(alpha, beta, g));
            }
        }
        if (!rotated) break;
    }
    std::array<double, N> out;
    for (std::size_t j = 0; j < N; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < N; ++k) s += std::norm(a(k, j));
        out[j] = std::sqrt(s);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

template std::array<double, 2> singular_values(const CMatrix<2> &);
template std::array<double, 4> singular_values(const CMatrix<4> &);

std::array<double, 3> singular_values_3(const RealMatrix3 &t) {
    CMatrix<3> gram;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += t(k, i) * t(k, j);
            gram(i, j) = s;
        }
    const auto eig = hermitian_eigenvalues(gram);
    std::array<double, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (eig[i] < -Tolerances::singular_clip)
            throw std::logic_error("t^T t has eigenvalue " + std::to_string(eig[i]));
        out[i] = std::sqrt(std::max(0.0, eig[i]));
    }
    return out;
}

ComplexMatrix4 partial_transpose_b(const ComplexMatrix4 &m) {
    ComplexMatrix4 r;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t bp = 0; bp < 2; ++bp) r(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
    return r;
}

ComplexMatrix4 partial_transpose_b(const DensityMatrix4 &rho) { return partial_transpose_b(rho.matrix()); }

DensityMatrix2 reduced_a(const DensityMatrix4 &rho) {
    ComplexMatrix2 r;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t ap = 0; ap < 2; ++ap) r(a, ap) = rho(2 * a, 2 * ap) + rho(2 * a + 1, 2 * ap + 1);
    return DensityMatrix2(r);
}

DensityMatrix2 reduced_b(const DensityMatrix4 &rho) {
    ComplexMatrix2 r;
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t bp = 0; bp < 2; ++bp) r(b, bp) = rho(b, bp) + rho(2 + b, 2 + bp);
    return DensityMatrix2(r);
}

double entropy_of_spectrum(std::span<const double> spectrum) {
    double s = 0.0;
    for (double p : spectrum) {
        if (p < Tolerances::min_eigenvalue)
            throw InvalidDensityMatrix("negative eigenvalue " + std::to_string(p) + " in entropy");
        p = std::clamp(p, 0.0, 1.0);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix4 &rho) {
    const auto spectrum = hermitian_eigenvalues(rho.matrix());
    return entropy_of_spectrum(spectrum);
}

double von_neumann_entropy(const DensityMatrix2 &rho) {
    const auto spectrum = hermitian_eigenvalues_2x2(rho.matrix());
    return entropy_of_spectrum(spectrum);
}

std::array<double, 2> hermitian_eigenvalues_2x2(const ComplexMatrix2 &h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double half_tr = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    const double hi = half_tr + radius;
    // Recover the smaller root from the determinant when it would cancel.
    const double det = a * d - std::norm(h(0, 1));
    const double lo = (half_tr > 0.0 && hi > 0.0) ? det / hi : half_tr - radius;
    return {hi, lo};
}

}  // namespace qcorr
