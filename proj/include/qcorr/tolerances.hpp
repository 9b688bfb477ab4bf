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

#pragma once

namespace qcorr {

/// Every numerical threshold used by the library lives here.
struct Tolerances {
    /// Default comparison tolerance for approx_equal and friends.
    static constexpr double compare = 1e-9;

    // Density-matrix validation.
    static constexpr double hermitian = 1e-12;
    static constexpr double trace = 1e-12;
    static constexpr double min_eigenvalue = -1e-10;

    // Jacobi eigensolver.
    static constexpr double jacobi_off_norm = 1e-13;
    static constexpr int jacobi_max_sweeps = 100;
    /// Asymmetry above which hermitian_eigenvalues rejects its input.
    static constexpr double eigen_hermitian = 1e-10;

    /// Negative eigenvalues of t^T t above this are clipped to zero.
    static constexpr double singular_clip = 1e-12;

    /// Dead band for sgn(det T) in the Horodecki FEF formula.
    static constexpr double det_sign_band = 1e-12;

    /// Kraus completeness.
    static constexpr double kraus_completeness = 1e-12;

    /// Unit norm of pure states.
    static constexpr double unit_norm = 1e-12;

    // X-state structure checks.
    static constexpr double x_state_zero = 1e-12;
    static constexpr double x_state_coherence = 1e-10;

    /// Discord lambda radicand may dip this far below zero before it is an error.
    static constexpr double lambda_radicand = 1e-12;

    // Brute-force searches.
    static constexpr double refine_step = 1e-9;
    static constexpr int refine_max_iterations = 20000;

    // Scalar optimizer over the input weight u.
    static constexpr double optimizer_scan_step = 1e-3;
    static constexpr double optimizer_tol = 1e-8;
    static constexpr double bisection_tol = 1e-8;
};

}  // namespace qcorr
