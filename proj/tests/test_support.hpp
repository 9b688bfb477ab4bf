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

// Random generators and small reference computations shared by the tests.
// Nothing here calls into the code paths it is used to check.

#pragma once

#include <cmath>
#include <random>

#include "qcorr/qmat.hpp"

namespace qcorr::testing {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(20261015);
    return gen;
}

inline double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

template <std::size_t N>
CMatrix<N> random_matrix() {
    std::normal_distribution<double> g;
    CMatrix<N> m;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = cplx{g(rng()), g(rng())};
    return m;
}

/// Gram-Schmidt on the columns of a Gaussian matrix.
template <std::size_t N>
CMatrix<N> random_unitary() {
    CMatrix<N> m = random_matrix<N>();
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < N; ++i) dot += std::conj(m(i, k)) * m(i, j);
            for (std::size_t i = 0; i < N; ++i) m(i, j) -= dot * m(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < N; ++i) norm += std::norm(m(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < N; ++i) m(i, j) /= norm;
    }
    return m;
}

/// G G^dag / Tr, a full-rank random state.
template <std::size_t N>
CMatrix<N> random_density() {
    const auto g = random_matrix<N>();
    CMatrix<N> rho = g * g.adjoint();
    rho *= cplx{1.0 / rho.trace().real()};
    return rho;
}

template <std::size_t N>
CMatrix<N> random_hermitian() {
    const auto g = random_matrix<N>();
    return (g + g.adjoint()) * cplx{0.5};
}

inline double entropy_bits(std::initializer_list<double> spectrum) {
    double s = 0.0;
    for (double p : spectrum)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

inline double binary_entropy(double p) { return entropy_bits({p, 1.0 - p}); }

/// Damped cat state built entrywise from the Kraus sum, without kron or the library channel.
inline ComplexMatrix4 damped_cat_by_hand(double d, double u, double phi) {
    const double k[2][2][2] = {{{1.0, 0.0}, {0.0, std::sqrt(1.0 - d)}}, {{0.0, std::sqrt(d)}, {0.0, 0.0}}};
    const cplx psi[4] = {std::sqrt(u), 0.0, 0.0, std::sqrt(1.0 - u) * std::polar(1.0, phi)};
    ComplexMatrix4 out;
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
            cplx v[4] = {};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int ap = 0; ap < 2; ++ap)
                        for (int bp = 0; bp < 2; ++bp) v[2 * a + b] += k[j][a][ap] * k[l][b][bp] * psi[2 * ap + bp];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) out(r, c) += v[r] * std::conj(v[c]);
        }
    return out;
}

}  // namespace qcorr::testing
