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

#include <vector>

#include "qcorr/qmat.hpp"

namespace qcorr {

/// Amplitude-damping strength d in [0, 1]; d = 0 is noise free.
class DampingStrength {
   public:
    /// Throws OutOfRange unless 0 <= d <= 1.
    explicit DampingStrength(double d);

    double d() const { return d_; }
    double dbar() const { return dbar_; }

   private:
    double d_;
    double dbar_;
};

/// Ordered Kraus operators of a single-qubit channel, sum_j M_j^dag M_j = I.
class KrausSet {
   public:
    /// Throws std::invalid_argument if the set is empty or not trace preserving
    /// within Tolerances::kraus_completeness.
    explicit KrausSet(std::vector<ComplexMatrix2> operators);

    const std::vector<ComplexMatrix2> &operators() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

    /// The noiseless channel {I}.
    static KrausSet identity();

   private:
    std::vector<ComplexMatrix2> ops_;
};

/// {M0 = diag(1, sqrt(1 - d)), M1 = sqrt(d) |0><1|}.
KrausSet amplitude_damping_kraus(const DampingStrength &strength);

/// sum_j M_j rho M_j^dag.
DensityMatrix2 apply_single(const DensityMatrix2 &rho, const KrausSet &k);

/// sum_{j,k} (A_j x B_k) rho (A_j x B_k)^dag with A from ka on qubit A and B from kb on qubit B.
DensityMatrix4 apply_local_pair(const DensityMatrix4 &rho, const KrausSet &ka, const KrausSet &kb);

}  // namespace qcorr
