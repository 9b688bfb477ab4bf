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
 * Two-qubit correlation measures: concurrence, negativity, fully entangled
 * fraction (FEF) and quantum discord.
 *
 * Each measure that has a closed form for X states also has a brute-force
 * counterpart that searches the defining optimization directly. The two are
 * kept independent so either can check the other.
 */

#pragma once

#include <array>
#include <string_view>

#include "qcorr/channel.hpp"
#include "qcorr/family.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

/// Populations and coherences of a two-qubit X state.
struct XStateEntries {
    double rho00 = 0.0, rho11 = 0.0, rho22 = 0.0, rho33 = 0.0;
    cplx rho03 = 0.0, rho12 = 0.0;

    /// Throws NotXState if any entry off the diagonal and anti-diagonal exceeds
    /// Tolerances::x_state_zero.
    static XStateEntries from(const DensityMatrix4 &rho);

    /// Throws std::invalid_argument if populations do not sum to one or a
    /// coherence exceeds the geometric mean of its populations.
    void validate() const;
};

/// Axis of a projective measurement on qubit A, in Bloch angles.
struct MeasurementBloch {
    double theta = 0.0;
    double phi = 0.0;
};

/// lambda_1..lambda_8 of the discord expression
/// D = sum_{i<=4} l_i log2 l_i - sum_{j>=5} l_j log2 l_j.
struct DiscordLambdas {
    std::array<double, 8> values{};

    /// One-based, matching the usual lambda_1..lambda_8 labels.
    double operator()(std::size_t i) const { return values.at(i - 1); }
};

enum class DiscordBranch { sigma_x, sigma_z, fallback };

std::string_view to_string(DiscordBranch branch);

struct XStateDiscord {
    double value;
    DiscordBranch branch;
    DiscordLambdas lambdas;
};

/// Wootters concurrence.
double concurrence(const DensityMatrix4 &rho);

/// max(0, -2 * smallest eigenvalue of the partial transpose).
double negativity(const DensityMatrix4 &rho);

/// T_ij = Tr(rho sigma_i x sigma_j), i, j in {x, y, z}.
RealMatrix3 correlation_matrix(const DensityMatrix4 &rho);

/// How sgn(det T) is evaluated in the singular-value FEF formula.
/// forced_positive exists only as a negative control for verification runs.
enum class DetSignRule { dead_band, forced_positive };

/// Fully entangled fraction from the singular values of the correlation matrix:
/// (1 + nu1 + nu2 - sgn(det T) nu3) / 4.
double fef(const DensityMatrix4 &rho, DetSignRule rule = DetSignRule::dead_band);

struct FefGrid {
    int points_per_angle = 41;
    bool refine = true;
};

struct FefSearch {
    double value;
    /// (t, p, q) with U = [[cos t e^{ip}, -sin t e^{-iq}], [sin t e^{iq}, cos t e^{-ip}]].
    std::array<double, 3> angles;
};

/// max over maximally entangled (I x U)|Phi+> of the overlap with rho, searched on
/// a grid over SU(2) and refined by Nelder-Mead. A lower bound on the true FEF.
FefSearch fef_bruteforce(const DensityMatrix4 &rho, const FefGrid &grid = {});

/// Overlap <phi|rho|phi> for |phi> = (I x U)|Phi+> at the given SU(2) angles.
double maximally_entangled_overlap(const DensityMatrix4 &rho, const std::array<double, 3> &angles);

/// (1 + negativity) / 2, the upper bound on the FEF reachable by local operations.
double fef_star_upper(const DensityMatrix4 &rho);

/// Discord of an X state from the optimal-measurement theorem for X states:
/// sigma_x on A if |sqrt(r00 r33) - sqrt(r11 r22)| <= |r12| + |r03|, otherwise
/// sigma_z if (|r12| + |r03|)^2 <= (r00 - r11)(r33 - r22). Throws
/// TheoremNotApplicable when neither holds.
XStateDiscord discord_xstate(const XStateEntries &x);

/// Lambda list for the damped cat state directly in terms of (d, u).
DiscordLambdas discord_lambdas(const DampingStrength &d, const CatParams &p);

/// sum_{i<=4} l_i log2 l_i - sum_{j>=5} l_j log2 l_j, with 0 log 0 = 0.
double discord_from_lambdas(const DiscordLambdas &lambdas);

struct DiscordGrid {
    int theta_points = 181;
    int phi_points = 121;
    bool refine = true;
};

struct DiscordSearch {
    double value;
    /// Minimizing axis, normalized to theta in [0, pi], phi in [0, 2 pi).
    MeasurementBloch argmin;
    double min_conditional_entropy;
    /// max - min of the conditional entropy over the coarse grid; ~0 means every axis is optimal.
    double objective_range;
};

/// I(rho) - [S(rho_B) - min_axis sum_k p_k S(rho_B|k)] with the minimum over projective
/// measurements on A. An upper bound on the discord restricted to projective measurements.
DiscordSearch discord_bruteforce(const DensityMatrix4 &rho, const DiscordGrid &grid = {});

/// sum_k p_k S(rho_B|k) for the projective measurement on A along the given axis.
double conditional_entropy(const DensityMatrix4 &rho, const MeasurementBloch &axis);

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix4 &rho);

}  // namespace qcorr
