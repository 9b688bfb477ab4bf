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
 * Closed-form curves for the damped cat family, extremum search over the
 * input weight u, advantage windows relative to the maximally entangled
 * input (u = 1/2), and sweep tables.
 *
 * Throughout, d is the per-qubit damping strength and u the |00> weight.
 */

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

enum class Measure { concurrence, fef, discord };

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

/// max{0, 2 (1-d) (sqrt(u(1-u)) - (1-u) d)}
double concurrence_closed(double d, double u);

/// 1/2 + (1-d)(sqrt(u(1-u)) - (1-u) d); not clipped, drops below 1/2 past sudden death.
double fef_closed(double d, double u);

struct ConcurrencePeak {
    double u_m;
    double c_max;
};

/// u_m = 1/2 + d / (2 sqrt(1+d^2)), c_max = (1-d)(sqrt(1+d^2) - d). Requires 0 < d < 1.
ConcurrencePeak u_m_concurrence(double d);

struct Window {
    double lo;
    double hi;
};

/// (1/2, 1/2 + d/(1+d^2)): inputs in this open interval keep more concurrence than u = 1/2.
/// Requires 0 < d < 1.
Window advantage_window_concurrence(double d);

enum class WeightBranch { u_high, u_low };

/// Residual concurrence written in terms of the input concurrence c0.
double reparametrized_concurrence(double d, double c0, WeightBranch branch);

/// Inverse of c0 = 2 sqrt(u(1-u)) on the chosen half of [0, 1].
double weight_from_initial_concurrence(double c0, WeightBranch branch);

/// Sudden-death boundary u = d^2 / (1 + d^2), where sqrt(u/(1-u)) = d.
double esd_boundary_weight(double d);

/// Boundary strength d = sqrt(u/(1-u)) clamped to 1.
double esd_boundary_strength(double u);

/// True when the concurrence of the damped cat state has died: u < 1, d > 0 and sqrt(u/(1-u)) < d.
bool in_esd_region(double d, double u);

/// The curve the optimizer maximizes: closed-form concurrence or FEF, and the
/// X-state discord of the damped state.
double measure_value(double d, double u, Measure m);

struct ExtremumRecord {
    Measure measure;
    double d;
    double u_star;
    double value;
    std::optional<double> u_m_analytic;
};

/// Maximizes measure_value over u in [0, 1]: scan on a 1e-3 grid, then
/// golden-section refinement on the bracket around the best grid point.
/// Requires 0 < d < 1 and tol > 0.
ExtremumRecord optimize_measure(double d, Measure m, double tol = Tolerances::optimizer_tol);

/// Upper end of the interval of u above 1/2 where measure_value exceeds its value at
/// u = 1/2, located by bisection between the optimum and u = 1. lo is always 1/2.
Window advantage_window_numeric(double d, Measure m, double tol = Tolerances::bisection_tol);

struct ReversalReport {
    double d;
    double u_prime;
    double c_prime, c_half;
    double fstar_prime, fstar_half;
    double discord_prime, discord_half;
    double c_initial_prime;
    bool concurrence_reversed;
    bool fstar_reversed;
    bool discord_reversed;
    bool initial_ordering_opposite;

    bool holds() const { return concurrence_reversed && fstar_reversed && discord_reversed && initial_ordering_opposite; }
};

/// Compares the damped states from inputs u' and 1/2 under concurrence, F* and
/// discord, evaluated on the density matrices.
ReversalReport ordering_reversal_check(double d, double u_prime);

/// All measures of one damped cat state, closed form next to oracle.
struct CorrelationReport {
    double d = 0.0;
    double u = 0.0;
    double phi = 0.0;
    double c_initial = 0.0;
    double c_closed = 0.0;
    double c_wootters = 0.0;
    double n = 0.0;
    double f_closed = 0.0;
    double f_horodecki = 0.0;
    double f_brute = 0.0;
    double fstar_upper = 0.0;
    /// F* = fstar_upper is exact: the negativity/concurrence equality condition holds or N = 0.
    bool fstar_tight = false;
    double d_xstate = 0.0;
    double d_brute = 0.0;
    bool esd = false;
    DiscordBranch theorem_branch = DiscordBranch::sigma_x;
};

struct OracleOptions {
    bool refine = true;
};

CorrelationReport correlation_report(double d, double u, double phi, const OracleOptions &opts = {});

/// Per-strength summary attached to a sweep. Extrema and windows exist only for 0 < d < 1.
struct StrengthSummary {
    double d;
    double u_esd_boundary;
    std::optional<ExtremumRecord> concurrence_peak;
    std::optional<ExtremumRecord> fef_peak;
    std::optional<ExtremumRecord> discord_peak;
    std::optional<Window> concurrence_window;
    std::optional<Window> discord_window;
};

struct SweepTable {
    std::vector<double> d_values;
    std::vector<double> u_values;
    double phi = 0.0;
    /// Row-major in (d, u): reports[i * u_values.size() + j].
    std::vector<CorrelationReport> reports;
    std::vector<StrengthSummary> summaries;
};

SweepTable sweep(const std::vector<double> &d_values, const std::vector<double> &u_values, double phi,
                 const OracleOptions &opts = {});

/// 0, step, 2 step, ..., 1 computed as i / n so the end point is exact. Requires 1/step integral
/// within 1e-9.
std::vector<double> unit_grid(double step);

}  // namespace qcorr
