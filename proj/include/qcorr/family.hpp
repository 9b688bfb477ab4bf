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
 * The cat-state input family sqrt(u)|00> + sqrt(1-u) e^{i phi}|11> and its
 * image under equal-strength amplitude damping on both qubits.
 */

#pragma once

#include <array>

#include "qcorr/channel.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

class CatParams {
   public:
    /// Throws OutOfRange unless 0 <= u <= 1 and 0 <= phi < 2 pi.
    explicit CatParams(double u, double phi = 0.0);

    double u() const { return u_; }
    double ubar() const { return ubar_; }
    double phi() const { return phi_; }

   private:
    double u_;
    double ubar_;
    double phi_;
};

/// Normalized two-qubit pure state.
class PureState4 {
   public:
    /// Throws std::invalid_argument unless the norm is one within Tolerances::unit_norm.
    explicit PureState4(const std::array<cplx, 4> &amplitudes);

    const std::array<cplx, 4> &amplitudes() const { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    /// |psi><psi|
    DensityMatrix4 projector() const;

   private:
    std::array<cplx, 4> amps_;
};

PureState4 cat_state(const CatParams &p);

/// 2 sqrt(u (1 - u)); independent of phi.
double initial_concurrence(const CatParams &p);

/// Closed-form X-shaped state obtained by damping both qubits of cat_state(p) with strength d.
DensityMatrix4 decohered_cat(const DampingStrength &d, const CatParams &p);

}  // namespace qcorr
