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

#include "doctest.h"
#include "qcorr/analysis.hpp"
#include "qcorr/errors.hpp"
#include "test_support.hpp"

using namespace qcorr;

namespace {

// Discord peak location, peak value and upper window end, from an independent
// bounded scalar optimizer and root finder on the lambda expression.
struct DiscordPeakRef {
    double d, u_star, value, window_hi;
};
constexpr DiscordPeakRef kDiscordPeaks[] = {
    {0.2, 0.5531190286424036, 0.5472535471839942, 0.6054797263564878},
    {0.4, 0.5697410067903326, 0.30346046854693576, 0.6376202607600033},
    {0.5, 0.5742871037763496, 0.21441761436357254, 0.646266790563574},
    {0.6, 0.5769902230162615, 0.14203112235872806, 0.6513598366644443},
    {0.8, 0.5763001055057367, 0.04112452125522437, 0.6499698856264209},
};

}  // namespace

TEST_CASE("measure names") {
    for (auto m : {Measure::concurrence, Measure::fef, Measure::discord}) CHECK(parse_measure(to_string(m)) == m);
    CHECK_FALSE(parse_measure("entropy").has_value());
}

TEST_CASE("closed forms") {
    CHECK(concurrence_closed(0.5, 0.5) == doctest::Approx(0.25));
    CHECK(concurrence_closed(0.5, 0.1) == 0.0);
    CHECK(fef_closed(0.5, 0.5) == doctest::Approx(0.625));
    CHECK(fef_closed(0.0, 0.5) == doctest::Approx(1.0));
    CHECK(fef_closed(0.5, 0.1) < 0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const double d = qcorr::testing::uniform(), u = qcorr::testing::uniform();
        CHECK(concurrence_closed(d, u) == doctest::Approx(std::max(0.0, 2.0 * fef_closed(d, u) - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("u_m_concurrence") {
    const auto p = u_m_concurrence(0.5);
    CHECK(p.u_m == doctest::Approx(0.7236068).epsilon(1e-7));
    CHECK(p.c_max == doctest::Approx(0.3090170).epsilon(1e-7));
    CHECK(u_m_concurrence(0.8).u_m == doctest::Approx(0.8123475).epsilon(1e-7));
    CHECK(concurrence_closed(0.5, p.u_m) == doctest::Approx(p.c_max).epsilon(1e-12));
    CHECK_THROWS_AS(u_m_concurrence(0.0), OutOfRange);
    CHECK_THROWS_AS(u_m_concurrence(1.0), OutOfRange);

    for (int i = 1; i < 100; ++i) {
        const double d = i * 0.01;
        const auto peak = u_m_concurrence(d);
        CHECK(peak.u_m > 0.5);
        CHECK(peak.u_m < 1.0);
        // Stationary point of the closed form.
        const double h = 1e-6;
        CHECK(concurrence_closed(d, peak.u_m) >= concurrence_closed(d, peak.u_m + h));
        CHECK(concurrence_closed(d, peak.u_m) >= concurrence_closed(d, peak.u_m - h));
    }
}

TEST_CASE("advantage_window_concurrence") {
    const auto w = advantage_window_concurrence(0.5);
    CHECK(w.lo == 0.5);
    CHECK(w.hi == doctest::Approx(0.9));
    CHECK(advantage_window_concurrence(0.8).hi == doctest::Approx(0.9878049).epsilon(1e-7));
    CHECK(concurrence_closed(0.5, 0.9) == doctest::Approx(concurrence_closed(0.5, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(advantage_window_concurrence(1.0), OutOfRange);
}

TEST_CASE("reparametrized concurrence") {
    const double c0 = 2.0 * std::sqrt(0.2);
    CHECK(reparametrized_concurrence(0.5, c0, WeightBranch::u_high) == doctest::Approx(0.3090170).epsilon(1e-7));
    CHECK(weight_from_initial_concurrence(0.6, WeightBranch::u_high) == doctest::Approx(0.9));
    CHECK(weight_from_initial_concurrence(0.6, WeightBranch::u_low) == doctest::Approx(0.1));
    for (int trial = 0; trial < 100; ++trial) {
        const double d = qcorr::testing::uniform(), c = qcorr::testing::uniform();
        for (auto b : {WeightBranch::u_high, WeightBranch::u_low}) {
            const double u = weight_from_initial_concurrence(c, b);
            CHECK(std::abs(reparametrized_concurrence(d, c, b) - concurrence_closed(d, u)) < 1e-12);
        }
        CHECK(reparametrized_concurrence(d, c, WeightBranch::u_high) >= reparametrized_concurrence(d, c, WeightBranch::u_low) - 1e-15);
    }
}

TEST_CASE("sudden death boundary") {
    CHECK(esd_boundary_weight(0.5) == doctest::Approx(0.2));
    CHECK(esd_boundary_strength(0.2) == doctest::Approx(0.5));
    CHECK(esd_boundary_strength(0.9) == 1.0);
    CHECK(in_esd_region(0.5, 0.1));
    CHECK_FALSE(in_esd_region(0.5, 0.3));
    CHECK_FALSE(in_esd_region(0.0, 0.0));
    CHECK(in_esd_region(1.0, 0.3));
    CHECK_FALSE(in_esd_region(1.0, 1.0));
    for (int i = 1; i < 200; ++i)
        for (int j = 1; j < 200; ++j) {
            const double d = i * 0.005, u = j * 0.005;
            if (std::abs(u - esd_boundary_weight(d)) < 1e-12) continue;
            CHECK((concurrence_closed(d, u) == 0.0) == in_esd_region(d, u));
        }
}

TEST_CASE("optimize_measure for concurrence and FEF") {
    const auto c = optimize_measure(0.5, Measure::concurrence);
    CHECK(std::abs(c.u_star - 0.7236068) < 1e-6);
    CHECK(c.value == doctest::Approx(0.3090170).epsilon(1e-7));
    REQUIRE(c.u_m_analytic.has_value());
    CHECK(*c.u_m_analytic == doctest::Approx(u_m_concurrence(0.5).u_m));

    const auto f = optimize_measure(0.5, Measure::fef);
    CHECK(f.value == doctest::Approx(0.6545085).epsilon(1e-7));
    CHECK(std::abs(f.u_star - c.u_star) < 1e-6);

    CHECK_THROWS_AS(optimize_measure(0.0, Measure::fef), OutOfRange);
    CHECK_THROWS_AS(optimize_measure(0.5, Measure::fef, 0.0), OutOfRange);
}

TEST_CASE("discord optimum sits below the concurrence optimum") {
    for (const auto &ref : kDiscordPeaks) {
        const auto rec = optimize_measure(ref.d, Measure::discord);
        CHECK(std::abs(rec.u_star - ref.u_star) < 1e-6);
        CHECK(rec.value == doctest::Approx(ref.value).epsilon(1e-10));
        CHECK_FALSE(rec.u_m_analytic.has_value());
        CHECK(rec.u_star > 0.5);
        CHECK(u_m_concurrence(ref.d).u_m - rec.u_star > 10 * Tolerances::optimizer_tol);

        const auto w = advantage_window_numeric(ref.d, Measure::discord);
        CHECK(w.lo == 0.5);
        CHECK(std::abs(w.hi - ref.window_hi) < 1e-7);
    }
}

TEST_CASE("advantage_window_numeric reproduces the concurrence window") {
    for (double d : {0.2, 0.4, 0.6, 0.8}) {
        const auto w = advantage_window_numeric(d, Measure::concurrence);
        CHECK(std::abs(w.hi - advantage_window_concurrence(d).hi) < 1e-7);
    }
}

TEST_CASE("ordering_reversal_check") {
    const auto at_06 = ordering_reversal_check(0.5, 0.6);
    CHECK(at_06.holds());
    CHECK(at_06.c_prime == doctest::Approx(std::sqrt(0.24) - 0.2));

    // u' = 0.7 lies past the discord window at d = 0.5: concurrence and F* reverse, discord does not.
    const auto at_07 = ordering_reversal_check(0.5, 0.7);
    CHECK(at_07.concurrence_reversed);
    CHECK(at_07.fstar_reversed);
    CHECK(at_07.initial_ordering_opposite);
    CHECK_FALSE(at_07.discord_reversed);
    CHECK_FALSE(at_07.holds());
    CHECK(at_07.discord_prime == doctest::Approx(0.20180397428944363).epsilon(1e-9));
    CHECK(at_07.discord_half == doctest::Approx(0.21040208776627656).epsilon(1e-9));

    CHECK_FALSE(ordering_reversal_check(0.5, 0.5).holds());
    CHECK_FALSE(ordering_reversal_check(0.5, 0.99).concurrence_reversed);
}

TEST_CASE("correlation_report") {
    const auto r = correlation_report(0.5, 0.5, 0.0);
    CHECK(r.c_initial == doctest::Approx(1.0));
    CHECK(r.c_closed == doctest::Approx(0.25));
    CHECK(r.c_wootters == doctest::Approx(0.25));
    CHECK(r.n == doctest::Approx(0.25));
    CHECK(r.f_closed == doctest::Approx(0.625));
    CHECK(r.f_horodecki == doctest::Approx(0.625));
    CHECK(std::abs(r.f_brute - 0.625) < 1e-6);
    CHECK(r.fstar_upper == doctest::Approx(0.625));
    CHECK(r.fstar_tight);
    CHECK(r.d_xstate == doctest::Approx(0.21040208776627656).epsilon(1e-9));
    CHECK(std::abs(r.d_brute - r.d_xstate) < 1e-6);
    CHECK_FALSE(r.esd);
    CHECK(r.theorem_branch == DiscordBranch::sigma_x);

    const auto dead = correlation_report(0.5, 0.1, 1.0, {.refine = false});
    CHECK(dead.esd);
    CHECK(dead.c_closed == 0.0);
    CHECK(dead.fstar_upper == doctest::Approx(0.5));
    CHECK(dead.f_closed < 0.5);
}

TEST_CASE("sweep") {
    const auto table = sweep({0.0, 0.5, 1.0}, {0.25, 0.5, 0.75}, 0.0, {.refine = false});
    CHECK(table.reports.size() == 9);
    CHECK(table.summaries.size() == 3);
    CHECK(table.reports[4].d == 0.5);
    CHECK(table.reports[4].u == 0.5);
    CHECK(table.reports[4].c_closed == doctest::Approx(0.25));
    CHECK_FALSE(table.summaries[0].concurrence_peak.has_value());
    CHECK_FALSE(table.summaries[2].discord_window.has_value());
    REQUIRE(table.summaries[1].concurrence_window.has_value());
    CHECK(table.summaries[1].concurrence_window->hi == doctest::Approx(0.9).epsilon(1e-7));
    CHECK(table.summaries[1].u_esd_boundary == doctest::Approx(0.2));
    for (const auto &r : table.reports) {
        CHECK(std::abs(r.c_wootters - r.c_closed) < 1e-10);
        CHECK(std::abs(r.f_horodecki - r.f_closed) < 1e-10);
        CHECK(r.f_brute <= r.f_horodecki + 1e-10);
        CHECK(r.d_brute >= r.d_xstate - 1e-10);
    }
    CHECK_THROWS_AS(sweep({1.5}, {0.5}, 0.0), OutOfRange);
}

TEST_CASE("unit_grid") {
    const auto g = unit_grid(0.05);
    CHECK(g.size() == 21);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[10] == 0.5);
    CHECK(unit_grid(0.005).size() == 201);
    CHECK_THROWS_AS(unit_grid(0.3), OutOfRange);
    CHECK_THROWS_AS(unit_grid(0.0), OutOfRange);
}
