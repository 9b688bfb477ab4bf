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

#include "qcorr/family.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

CatParams::CatParams(double u, double phi) : u_(u), ubar_(1.0 - u), phi_(phi) {
    if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("weight u=" + std::to_string(u) + " outside [0, 1]");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw OutOfRange("phase phi=" + std::to_string(phi) + " outside [0, 2pi)");
}

PureState4::PureState4(const std::array<cplx, 4> &amplitudes) : amps_(amplitudes) {
    double n = 0.0;
    for (const auto &a : amps_) n += std::norm(a);
    if (std::abs(n - 1.0) > Tolerances::unit_norm)
        throw std::invalid_argument("pure state norm^2 " + std::to_string(n) + " != 1");
}

DensityMatrix4 PureState4::projector() const {
    ComplexMatrix4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = amps_[i] * std::conj(amps_[j]);
    return DensityMatrix4(m);
}

PureState4 cat_state(const CatParams &p) {
    return PureState4({std::sqrt(p.u()), 0.0, 0.0, std::sqrt(p.ubar()) * std::polar(1.0, p.phi())});
}

double initial_concurrence(const CatParams &p) { return 2.0 * std::sqrt(p.u() * p.ubar()); }

DensityMatrix4 decohered_cat(const DampingStrength &strength, const CatParams &p) {
    const double d = strength.d();
    const double dbar = strength.dbar();
    const double u = p.u();
    const double ubar = p.ubar();
    const double mixed = ubar * dbar * d;
    const double corner = dbar * std::sqrt(u * ubar);

    ComplexMatrix4 m;
    m(0, 0) = u + ubar * d * d;
    m(1, 1) = mixed;
    m(2, 2) = mixed;
    m(3, 3) = ubar * dbar * dbar;
    m(0, 3) = corner * std::polar(1.0, -p.phi());
    m(3, 0) = corner * std::polar(1.0, p.phi());
    return DensityMatrix4(m);
}

}  // namespace qcorr
