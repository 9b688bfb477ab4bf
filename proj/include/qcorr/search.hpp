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
 * Derivative-free local searches used by the brute-force oracles and the
 * input-weight optimizer. All are deterministic.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qcorr::search {

template <std::size_t N>
struct Minimum {
    std::array<double, N> x;
    double value;
    int evaluations;
};

/// Nelder-Mead simplex minimization. Stops once every vertex lies within
/// xtol of the best one (max-norm) or after max_iterations, then restarts
/// from the best vertex until a restart no longer improves the value.
template <std::size_t N, class F>
Minimum<N> nelder_mead(F &&f, const std::array<double, N> &start, const std::array<double, N> &step,
                       double xtol, int max_iterations) {
    using Point = std::array<double, N>;
    int evaluations = 0;
    auto eval = [&](const Point &p) {
        ++evaluations;
        return f(p);
    };

    Point best = start;
    double best_value = eval(start);
    Point scale = step;

    for (int restart = 0; restart < 4; ++restart) {
        std::array<Point, N + 1> simplex;
        std::array<double, N + 1> values;
        simplex[0] = best;
        values[0] = best_value;
        for (std::size_t i = 0; i < N; ++i) {
            simplex[i + 1] = best;
            simplex[i + 1][i] += scale[i];
            values[i + 1] = eval(simplex[i + 1]);
        }

        for (int iter = 0; iter < max_iterations; ++iter) {
            std::array<std::size_t, N + 1> order;
            for (std::size_t i = 0; i <= N; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            std::array<Point, N + 1> s;
            std::array<double, N + 1> v;
            for (std::size_t i = 0; i <= N; ++i) {
                s[i] = simplex[order[i]];
                v[i] = values[order[i]];
            }
            simplex = s;
            values = v;

            double spread = 0.0;
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t k = 0; k < N; ++k) spread = std::max(spread, std::abs(simplex[i][k] - simplex[0][k]));
            if (spread < xtol) break;

            Point centroid{};
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t k = 0; k < N; ++k) centroid[k] += simplex[i][k] / static_cast<double>(N);

            auto along = [&](double t) {
                Point p;
                for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + t * (simplex[N][k] - centroid[k]);
                return p;
            };

            const Point reflected = along(-1.0);
            const double fr = eval(reflected);
            if (fr < values[0]) {
                const Point expanded = along(-2.0);
                const double fe = eval(expanded);
                if (fe < fr) {
                    simplex[N] = expanded;
                    values[N] = fe;
                } else {
                    simplex[N] = reflected;
                    values[N] = fr;
                }
                continue;
            }
            if (fr < values[N - 1]) {
                simplex[N] = reflected;
                values[N] = fr;
                continue;
            }
            const bool outside = fr < values[N];
            const Point contracted = along(outside ? -0.5 : 0.5);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : values[N])) {
                simplex[N] = contracted;
                values[N] = fc;
                continue;
            }
            for (std::size_t i = 1; i <= N; ++i) {
                for (std::size_t k = 0; k < N; ++k) simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                values[i] = eval(simplex[i]);
            }
        }

        const auto it = std::min_element(values.begin(), values.end());
        const double found = *it;
        const Point where = simplex[static_cast<std::size_t>(it - values.begin())];
        const bool improved = found < best_value;
        if (found <= best_value) {
            best_value = found;
            best = where;
        }
        if (!improved && restart > 0) break;
        for (auto &s : scale) s = std::max(s * 1e-2, 10.0 * xtol);
    }
    return {best, best_value, evaluations};
}

struct ScalarExtremum {
    double x;
    double value;
};

/// Golden-section search for the maximum of f on [lo, hi] down to an interval of width tol.
template <class F>
ScalarExtremum golden_section_maximize(F &&f, double lo, double hi, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("golden_section_maximize: empty interval");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    double fx = f(x);
    // Keep whichever probe was actually best.
    if (fc > fx) return {c, fc};
    if (fd > fx) return {d, fd};
    return {x, fx};
}

/// Bisection for a sign change of g on [lo, hi]; g(lo) and g(hi) must differ in sign
/// (zero counts as nonpositive). Returns the midpoint of the final bracket.
template <class G>
double bisect(G &&g, double lo, double hi, double tol) {
    const bool lo_positive = g(lo) > 0.0;
    if (lo_positive == (g(hi) > 0.0)) throw std::invalid_argument("bisect: no sign change on bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) > 0.0) == lo_positive)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qcorr::search
