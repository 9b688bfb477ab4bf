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

#include "qcorr/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/search.hpp"

namespace qcorr {

namespace {

void require_unit(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange(std::string(name) + "=" + std::to_string(x) + " outside [0, 1]");
}

void require_open_unit(double d) {
    if (!(d > 0.0 && d < 1.0)) throw OutOfRange("d=" + std::to_string(d) + " outside (0, 1)");
}

}  // namespace

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::concurrence:
            return "concurrence";
        case Measure::fef:
            return "fef";
        case Measure::discord:
            return "discord";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    if (name == "concurrence") return Measure::concurrence;
    if (name == "fef") return Measure::fef;
    if (name == "discord") return Measure::discord;
    return std::nullopt;
}

double concurrence_closed(double d, double u) {
    require_unit(d, "d");
    require_unit(u, "u");
    const double ubar = 1.0 - u;
    return std::max(0.0, 2.0 * (1.0 - d) * (std::sqrt(u * ubar) - ubar * d));
}

double fef_closed(double d, double u) {
    require_unit(d, "d");
    require_unit(u, "u");
    const double ubar = 1.0 - u;
    return 0.5 + (1.0 - d) * (std::sqrt(u * ubar) - ubar * d);
}

ConcurrencePeak u_m_concurrence(double d) {
    require_open_unit(d);
    const double root = std::sqrt(1.0 + d * d);
    return {0.5 + d / (2.0 * root), (1.0 - d) * (root - d)};
}

Window advantage_window_concurrence(double d) {
    require_open_unit(d);
    return {0.5, 0.5 + d / (1.0 + d * d)};
}

double reparametrized_concurrence(double d, double c0, WeightBranch branch) {
    require_unit(d, "d");
    require_unit(c0, "c0");
    const double dbar = 1.0 - d;
    const double s = std::sqrt(std::max(0.0, 1.0 - c0 * c0));
    if (branch == WeightBranch::u_high) return dbar * (c0 - d * (1.0 - s));
    return std::max(0.0, dbar * (c0 - d * (1.0 + s)));
}

double weight_from_initial_concurrence(double c0, WeightBranch branch) {
    require_unit(c0, "c0");
    const double s = std::sqrt(std::max(0.0, 1.0 - c0 * c0));
    return branch == WeightBranch::u_high ? 0.5 * (1.0 + s) : 0.5 * (1.0 - s);
}

double esd_boundary_weight(double d) {
    require_unit(d, "d");
    return d * d / (1.0 + d * d);
}

double esd_boundary_strength(double u) {
    require_unit(u, "u");
    if (u >= 0.5) return 1.0;
    return std::min(1.0, std::sqrt(u / (1.0 - u)));
}

bool in_esd_region(double d, double u) {
    require_unit(d, "d");
    require_unit(u, "u");
    return u < 1.0 && d > 0.0 && std::sqrt(u / (1.0 - u)) < d;
}

double measure_value(double d, double u, Measure m) {
    switch (m) {
        case Measure::concurrence:
            return concurrence_closed(d, u);
        case Measure::fef:
            return fef_closed(d, u);
        case Measure::discord: {
            const auto rho = decohered_cat(DampingStrength(d), CatParams(u));
            return discord_xstate(XStateEntries::from(rho)).value;
        }
    }
    throw std::logic_error("unknown measure");
}

ExtremumRecord optimize_measure(double d, Measure m, double tol) {
    require_open_unit(d);
    if (!(tol > 0.0)) throw OutOfRange("tol must be positive");

    const int n = static_cast<int>(std::lround(1.0 / Tolerances::optimizer_scan_step));
    int best_i = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double v = measure_value(d, static_cast<double>(i) / n, m);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double lo = static_cast<double>(std::max(0, best_i - 1)) / n;
    const double hi = static_cast<double>(std::min(n, best_i + 1)) / n;
    auto peak = search::golden_section_maximize([&](double u) { return measure_value(d, u, m); }, lo, hi, tol);
    if (best > peak.value) peak = {static_cast<double>(best_i) / n, best};

    ExtremumRecord rec{m, d, peak.x, peak.value, std::nullopt};
    if (m != Measure::discord) rec.u_m_analytic = u_m_concurrence(d).u_m;
    return rec;
}

Window advantage_window_numeric(double d, Measure m, double tol) {
    const auto peak = optimize_measure(d, m);
    const double reference = measure_value(d, 0.5, m);
    auto gain = [&](double u) { return measure_value(d, u, m) - reference; };
    if (!(gain(peak.u_star) > 0.0)) return {0.5, 0.5};
    return {0.5, search::bisect(gain, peak.u_star, 1.0, tol)};
}

ReversalReport ordering_reversal_check(double d, double u_prime) {
    const DampingStrength strength(d);
    const CatParams prime(u_prime);
    const CatParams half(0.5);
    const auto rho_prime = decohered_cat(strength, prime);
    const auto rho_half = decohered_cat(strength, half);

    ReversalReport r{};
    r.d = d;
    r.u_prime = u_prime;
    r.c_prime = concurrence(rho_prime);
    r.c_half = concurrence(rho_half);
    r.fstar_prime = fef_star_upper(rho_prime);
    r.fstar_half = fef_star_upper(rho_half);
    r.discord_prime = discord_xstate(XStateEntries::from(rho_prime)).value;
    r.discord_half = discord_xstate(XStateEntries::from(rho_half)).value;
    r.c_initial_prime = initial_concurrence(prime);
    r.concurrence_reversed = r.c_prime > r.c_half;
    r.fstar_reversed = r.fstar_prime > r.fstar_half;
    r.discord_reversed = r.discord_prime > r.discord_half;
    r.initial_ordering_opposite = r.c_initial_prime < initial_concurrence(half);
    return r;
}

CorrelationReport correlation_report(double d, double u, double phi, const OracleOptions &opts) {
    const DampingStrength strength(d);
    const CatParams params(u, phi);
    const auto rho = decohered_cat(strength, params);

    CorrelationReport r;
    r.d = d;
    r.u = u;
    r.phi = phi;
    r.c_initial = initial_concurrence(params);
    r.c_closed = concurrence_closed(d, u);
    r.c_wootters = concurrence(rho);
    r.n = negativity(rho);
    r.f_closed = fef_closed(d, u);
    r.f_horodecki = fef(rho);
    r.f_brute = fef_bruteforce(rho, {.points_per_angle = 41, .refine = opts.refine}).value;
    r.fstar_upper = fef_star_upper(rho);
    r.fstar_tight = !in_esd_region(d, u) || r.n == 0.0;
    const auto brute = discord_bruteforce(rho, {.theta_points = 181, .phi_points = 121, .refine = opts.refine});
    r.d_brute = brute.value;
    try {
        const auto x = discord_xstate(XStateEntries::from(rho));
        r.d_xstate = x.value;
        r.theorem_branch = x.branch;
    } catch (const TheoremNotApplicable &) {
        r.d_xstate = brute.value;
        r.theorem_branch = DiscordBranch::fallback;
    }
    r.esd = r.c_closed == 0.0 && in_esd_region(d, u);
    return r;
}

SweepTable sweep(const std::vector<double> &d_values, const std::vector<double> &u_values, double phi,
                 const OracleOptions &opts) {
    for (double d : d_values) require_unit(d, "d");
    for (double u : u_values) require_unit(u, "u");

    SweepTable table;
    table.d_values = d_values;
    table.u_values = u_values;
    table.phi = phi;
    table.reports.reserve(d_values.size() * u_values.size());
    for (double d : d_values)
        for (double u : u_values) table.reports.push_back(correlation_report(d, u, phi, opts));

    for (double d : d_values) {
        StrengthSummary s{d, esd_boundary_weight(d), {}, {}, {}, {}, {}};
        if (d > 0.0 && d < 1.0) {
            s.concurrence_peak = optimize_measure(d, Measure::concurrence);
            s.fef_peak = optimize_measure(d, Measure::fef);
            s.discord_peak = optimize_measure(d, Measure::discord);
            s.concurrence_window = advantage_window_numeric(d, Measure::concurrence);
            s.discord_window = advantage_window_numeric(d, Measure::discord);
        }
        table.summaries.push_back(s);
    }
    return table;
}

std::vector<double> unit_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw OutOfRange("grid step must be in (0, 1]");
    const double count = 1.0 / step;
    const long n = std::lround(count);
    if (std::abs(count - static_cast<double>(n)) > 1e-9 * count)
        throw OutOfRange("grid step " + std::to_string(step) + " does not divide [0, 1] evenly");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) out.push_back(static_cast<double>(i) / static_cast<double>(n));
    return out;
}

}  // namespace qcorr
