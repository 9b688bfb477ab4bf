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

#include <cmath>
#include <numbers>

#include "cli.hpp"
#include "qcorr/analysis.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/family.hpp"
#include "qcorr/measures.hpp"

namespace qcorr::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPhases[] = {0.0, kPi / 3.0, kPi};

/// Tracks the largest discrepancy and where it happened.
class Suite {
   public:
    Suite(std::string name, double tolerance, const RunConfig &cfg) {
        result_.name = std::move(name);
        result_.tolerance = cfg.tol_given ? cfg.tol : tolerance;
    }

    void record(double discrepancy, double d, double u, double phi) {
        if (!(discrepancy <= result_.max_discrepancy) || first_) {
            first_ = false;
            result_.max_discrepancy = discrepancy;
            result_.d = d;
            result_.u = u;
            result_.phi = phi;
        }
    }

    SuiteResult finish() {
        result_.passed = result_.max_discrepancy <= result_.tolerance;
        return result_;
    }

   private:
    SuiteResult result_;
    bool first_ = true;
};

DensityMatrix4 damped(double d, double u, double phi) { return decohered_cat(DampingStrength(d), CatParams(u, phi)); }

bool equality_region(double d, double u) { return !in_esd_region(d, u); }

SuiteResult channel_suite(const RunConfig &cfg) {
    Suite s("channel", 1e-12, cfg);
    for (double d : unit_grid(0.05)) {
        const auto k = amplitude_damping_kraus(DampingStrength(d));
        for (double u : unit_grid(0.05))
            for (double phi : kPhases) {
                const CatParams p(u, phi);
                const auto closed = decohered_cat(DampingStrength(d), p).matrix();
                const auto channel = apply_local_pair(cat_state(p).projector(), k, k).matrix();
                const double trace_err = std::abs(closed.trace() - 1.0);
                const double negativity_err = std::max(0.0, -hermitian_eigenvalues(closed)[3]);
                s.record(std::max({max_abs_difference(closed, channel), trace_err, negativity_err}), d, u, phi);
            }
    }
    return s.finish();
}

SuiteResult concurrence_suite(const RunConfig &cfg) {
    Suite s("concurrence", 1e-10, cfg);
    for (double d : unit_grid(0.05))
        for (double u : unit_grid(0.05))
            for (double phi : kPhases) s.record(std::abs(concurrence(damped(d, u, phi)) - concurrence_closed(d, u)), d, u, phi);
    return s.finish();
}

SuiteResult negativity_suite(const RunConfig &cfg) {
    Suite s("negativity", 1e-10, cfg);
    for (double d : unit_grid(0.05))
        for (double u : unit_grid(0.05)) {
            const auto rho = damped(d, u, 0.0);
            const double n = negativity(rho);
            s.record(equality_region(d, u) ? std::abs(n - concurrence(rho)) : n, d, u, 0.0);
        }
    return s.finish();
}

DetSignRule sign_rule(const RunConfig &cfg) {
    return cfg.fault == Fault::det_sign ? DetSignRule::forced_positive : DetSignRule::dead_band;
}

SuiteResult fef_suite(const RunConfig &cfg) {
    Suite s("fef", 1e-10, cfg);
    for (double d : unit_grid(0.05))
        for (double u : unit_grid(0.05))
            for (double phi : kPhases) s.record(std::abs(fef(damped(d, u, phi), sign_rule(cfg)) - fef_closed(d, u)), d, u, phi);
    return s.finish();
}

SuiteResult fef_bruteforce_suite(const RunConfig &cfg) {
    Suite s("fef_bruteforce", 1e-6, cfg);
    for (double d : unit_grid(0.1))
        for (double u : unit_grid(0.1)) {
            const auto rho = damped(d, u, 0.0);
            const double brute = fef_bruteforce(rho, {.points_per_angle = 41, .refine = cfg.grid_refine}).value;
            s.record(std::abs(fef(rho, sign_rule(cfg)) - brute), d, u, 0.0);
        }
    return s.finish();
}

SuiteResult fstar_suite(const RunConfig &cfg) {
    Suite s("fstar", 1e-10, cfg);
    for (double d : unit_grid(0.05))
        for (double u : unit_grid(0.05)) {
            if (!equality_region(d, u)) continue;
            const auto rho = damped(d, u, 0.0);
            s.record(std::abs(fef_star_upper(rho) - fef(rho, sign_rule(cfg))), d, u, 0.0);
        }
    return s.finish();
}

SuiteResult discord_suite(const RunConfig &cfg) {
    Suite s("discord", 1e-6, cfg);
    for (double d : unit_grid(0.1))
        for (double u : unit_grid(0.1)) {
            const auto rho = damped(d, u, 0.0);
            const double closed = discord_xstate(XStateEntries::from(rho)).value;
            const auto brute =
                discord_bruteforce(rho, {.theta_points = 181, .phi_points = 121, .refine = cfg.grid_refine});
            s.record(std::abs(closed - brute.value), d, u, 0.0);
        }
    return s.finish();
}

SuiteResult discord_lambda_suite(const RunConfig &cfg) {
    Suite s("discord_lambdas", 1e-12, cfg);
    for (double d : unit_grid(0.05))
        for (double u : unit_grid(0.05)) {
            const double from_lambdas = discord_from_lambdas(discord_lambdas(DampingStrength(d), CatParams(u)));
            const double from_state = discord_xstate(XStateEntries::from(damped(d, u, 0.0))).value;
            s.record(std::abs(from_lambdas - from_state), d, u, 0.0);
        }
    return s.finish();
}

/// Counts misclassified grid points; points within 1e-12 of the boundary are skipped.
SuiteResult esd_suite(const RunConfig &cfg) {
    Suite s("esd", 0.0, cfg);
    double misclassified = 0.0;
    double worst_d = 0.0, worst_u = 0.0;
    for (int i = 1; i < 200; ++i)
        for (int j = 1; j < 200; ++j) {
            const double d = i / 200.0, u = j / 200.0;
            if (std::abs(std::sqrt(u / (1.0 - u)) - d) < 1e-12) continue;
            const double c = concurrence(damped(d, u, 0.0));
            const bool dead = std::sqrt(u / (1.0 - u)) < d;
            const bool ok = dead ? c == 0.0 : c > 0.0;
            if (!ok) {
                misclassified += 1.0;
                worst_d = d;
                worst_u = u;
            }
        }
    s.record(misclassified, worst_d, worst_u, 0.0);
    return s.finish();
}

SuiteResult optimizer_suite(const RunConfig &cfg) {
    Suite s("optimizer", 1e-6, cfg);
    for (int i = 1; i <= 19; ++i) {
        const double d = i * 0.05;
        const auto rec = optimize_measure(d, Measure::concurrence);
        const auto peak = u_m_concurrence(d);
        s.record(std::max(std::abs(rec.u_star - peak.u_m), std::abs(rec.value - peak.c_max)), d, rec.u_star, 0.0);
    }
    return s.finish();
}

SuiteResult window_suite(const RunConfig &cfg) {
    Suite s("window", 1e-6, cfg);
    for (double d : {0.2, 0.4, 0.6, 0.8}) {
        const double numeric = advantage_window_numeric(d, Measure::concurrence).hi;
        s.record(std::abs(numeric - advantage_window_concurrence(d).hi), d, numeric, 0.0);
    }
    return s.finish();
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const RunConfig &cfg) {
    return {channel_suite(cfg),   concurrence_suite(cfg), negativity_suite(cfg),     fef_suite(cfg),
            fef_bruteforce_suite(cfg), fstar_suite(cfg),  discord_suite(cfg),        discord_lambda_suite(cfg),
            esd_suite(cfg),       optimizer_suite(cfg),   window_suite(cfg)};
}

}  // namespace qcorr::cli
