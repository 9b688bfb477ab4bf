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

#include "qcorr/channel.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

DampingStrength::DampingStrength(double d) : d_(d), dbar_(1.0 - d) {
    if (!(d >= 0.0 && d <= 1.0)) throw OutOfRange("damping strength d=" + std::to_string(d) + " outside [0, 1]");
}

KrausSet::KrausSet(std::vector<ComplexMatrix2> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) throw std::invalid_argument("Kraus set is empty");
    ComplexMatrix2 sum;
    for (const auto &m : ops_) sum += m.adjoint() * m;
    if (!approx_equal(sum, ComplexMatrix2::identity(), Tolerances::kraus_completeness))
        throw std::invalid_argument("Kraus operators are not trace preserving");
}

KrausSet KrausSet::identity() { return KrausSet({ComplexMatrix2::identity()}); }

KrausSet amplitude_damping_kraus(const DampingStrength &strength) {
    ComplexMatrix2 m0 = ComplexMatrix2::diagonal({1.0, std::sqrt(strength.dbar())});
    ComplexMatrix2 m1;
    m1(0, 1) = std::sqrt(strength.d());
    return KrausSet({m0, m1});
}

DensityMatrix2 apply_single(const DensityMatrix2 &rho, const KrausSet &k) {
    ComplexMatrix2 out;
    for (const auto &m : k.operators()) out += m * rho.matrix() * m.adjoint();
    return DensityMatrix2(out);
}

DensityMatrix4 apply_local_pair(const DensityMatrix4 &rho, const KrausSet &ka, const KrausSet &kb) {
    ComplexMatrix4 out;
    for (const auto &a : ka.operators()) {
        for (const auto &b : kb.operators()) {
            const ComplexMatrix4 m = kron(a, b);
            out += m * rho.matrix() * m.adjoint();
        }
    }
    return DensityMatrix4(out);
}

}  // namespace qcorr
