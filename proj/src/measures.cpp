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

#include "qcorr/measures.hpp"

#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/search.hpp"

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;

double trace_product(const ComplexMatrix4 &a, const ComplexMatrix4 &b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * b(j, i);
    return s.real();
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

}  // namespace

std::string_view to_string(DiscordBranch branch) {
    switch (branch) {
        case DiscordBranch::sigma_x:
            return "sigma_x";
        case DiscordBranch::sigma_z:
            return "sigma_z";
        case DiscordBranch::fallback:
            return "fallback";
    }
    return "unknown";
}

XStateEntries XStateEntries::from(const DensityMatrix4 &rho) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x && std::abs(rho(i, j)) > Tolerances::x_state_zero)
                throw NotXState("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is nonzero");
        }
    XStateEntries x;
    x.rho00 = rho(0, 0).real();
    x.rho11 = rho(1, 1).real();
    x.rho22 = rho(2, 2).real();
    x.rho33 = rho(3, 3).real();
    x.rho03 = rho(0, 3);
    x.rho12 = rho(1, 2);
    return x;
}

void XStateEntries::validate() const {
    if (std::abs(rho00 + rho11 + rho22 + rho33 - 1.0) > Tolerances::trace)
        throw std::invalid_argument("X-state populations do not sum to one");
    if (std::abs(rho03) > std::sqrt(std::max(0.0, rho00 * rho33)) + Tolerances::x_state_coherence)
        throw std::invalid_argument("|rho03| exceeds sqrt(rho00 rho33)");
    if (std::abs(rho12) > std::sqrt(std::max(0.0, rho11 * rho22)) + Tolerances::x_state_coherence)
        throw std::invalid_argument("|rho12| exceeds sqrt(rho11 rho22)");
}

double concurrence(const DensityMatrix4 &rho) {
    // sqrt(omega_i) are the singular values of A^T Y A, where rho = A A^dag and
    // Y = sigma_y x sigma_y, because rho Y rho* Y is similar to M M^dag with M = A^dag Y A*.
    const auto eig = hermitian_eigen(rho.matrix());
    ComplexMatrix4 a;
    for (std::size_t k = 0; k < 4; ++k) {
        const double w = std::sqrt(std::max(0.0, eig.values[k]));
        for (std::size_t i = 0; i < 4; ++i) a(i, k) = eig.vectors(i, k) * w;
    }
    static const ComplexMatrix4 yy = kron(pauli::y(), pauli::y());
    const auto sv = singular_values(a.transpose() * yy * a);
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

double negativity(const DensityMatrix4 &rho) {
    const auto spectrum = hermitian_eigenvalues(partial_transpose_b(rho));
    return std::max(0.0, -2.0 * spectrum[3]);
}

RealMatrix3 correlation_matrix(const DensityMatrix4 &rho) {
    const std::array<ComplexMatrix2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
    RealMatrix3 t;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = trace_product(rho.matrix(), kron(sigma[i], sigma[j]));
    return t;
}

double fef(const DensityMatrix4 &rho, DetSignRule rule) {
    const RealMatrix3 t = correlation_matrix(rho);
    const auto nu = singular_values_3(t);
    double sign = 1.0;
    if (rule == DetSignRule::dead_band) {
        const double det = t.determinant();
        sign = det > Tolerances::det_sign_band ? 1.0 : (det < -Tolerances::det_sign_band ? -1.0 : 0.0);
    }
    return (1.0 + nu[0] + nu[1] - sign * nu[2]) / 4.0;
}

double maximally_entangled_overlap(const DensityMatrix4 &rho, const std::array<double, 3> &angles) {
    const cplx alpha = std::polar(std::cos(angles[0]), angles[1]);
    const cplx beta = std::polar(std::sin(angles[0]), angles[2]);
    // U = [[alpha, -conj(beta)], [beta, conj(alpha)]]; (I x U)|Phi+> has amplitude U(b, a)/sqrt2 on |ab>.
    const double r = 1.0 / std::numbers::sqrt2;
    const std::array<cplx, 4> phi{alpha * r, beta * r, -std::conj(beta) * r, std::conj(alpha) * r};
    cplx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < 4; ++j) row += rho(i, j) * phi[j];
        s += std::conj(phi[i]) * row;
    }
    return s.real();
}

FefSearch fef_bruteforce(const DensityMatrix4 &rho, const FefGrid &grid) {
    const int n = grid.points_per_angle;
    if (n < 2) throw std::invalid_argument("fef_bruteforce needs at least 2 points per angle");
    const double t_step = (kPi / 2.0) / (n - 1);
    const double p_step = 2.0 * kPi / n;

    std::array<double, 3> best_angles{};
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const std::array<double, 3> ang{i * t_step, j * p_step, k * p_step};
                const double v = maximally_entangled_overlap(rho, ang);
                if (v > best) {
                    best = v;
                    best_angles = ang;
                }
            }
    if (!grid.refine) return {best, best_angles};

    const auto refined = search::nelder_mead(
        [&](const std::array<double, 3> &ang) { return -maximally_entangled_overlap(rho, ang); }, best_angles,
        std::array<double, 3>{t_step, p_step, p_step}, Tolerances::refine_step, Tolerances::refine_max_iterations);
    if (-refined.value > best) return {-refined.value, refined.x};
    return {best, best_angles};
}

double fef_star_upper(const DensityMatrix4 &rho) { return 0.5 * (1.0 + negativity(rho)); }

XStateDiscord discord_xstate(const XStateEntries &x) {
    x.validate();
    // Local diagonal phases make both coherences real and nonnegative without
    // changing the discord, so only their magnitudes matter.
    const double a = std::abs(x.rho03);
    const double b = std::abs(x.rho12);
    constexpr double slack = 1e-12;

    DiscordLambdas l;
    const double outer_sum = x.rho00 + x.rho33;
    const double outer_r = std::hypot(x.rho00 - x.rho33, 2.0 * a);
    const double inner_sum = x.rho11 + x.rho22;
    const double inner_r = std::hypot(x.rho11 - x.rho22, 2.0 * b);
    l.values[0] = 0.5 * (inner_sum + inner_r);
    l.values[1] = 0.5 * (inner_sum - inner_r);
    l.values[2] = 0.5 * (outer_sum + outer_r);
    l.values[3] = 0.5 * (outer_sum - outer_r);

    const double sx_lhs = std::abs(std::sqrt(x.rho00 * x.rho33) - std::sqrt(x.rho11 * x.rho22));
    if (sx_lhs <= a + b + slack) {
        const double r = std::hypot(x.rho00 + x.rho22 - x.rho11 - x.rho33, 2.0 * (a + b));
        l.values[4] = 0.5 * (1.0 + r);
        l.values[5] = 0.5 * (1.0 - r);
        l.values[6] = x.rho00 + x.rho11;
        l.values[7] = x.rho22 + x.rho33;
        return {std::max(0.0, discord_from_lambdas(l)), DiscordBranch::sigma_x, l};
    }
    if ((a + b) * (a + b) <= (x.rho00 - x.rho11) * (x.rho33 - x.rho22) + slack) {
        l.values[4] = x.rho00;
        l.values[5] = x.rho11;
        l.values[6] = x.rho22;
        l.values[7] = x.rho33;
        return {std::max(0.0, discord_from_lambdas(l)), DiscordBranch::sigma_z, l};
    }
    throw TheoremNotApplicable("neither sigma_x nor sigma_z condition holds for this X state");
}

DiscordLambdas discord_lambdas(const DampingStrength &d, const CatParams &p) {
    const double m = p.ubar() * d.dbar() * d.d();
    double radicand = 1.0 - 4.0 * m;
    if (radicand < -Tolerances::lambda_radicand)
        throw std::logic_error("discord radicand " + std::to_string(radicand) + " is negative");
    radicand = std::max(0.0, radicand);
    const double root = std::sqrt(radicand);
    DiscordLambdas l;
    l.values = {m,
                m,
                0.5 * (1.0 - 2.0 * m) + 0.5 * root,
                0.5 * (1.0 - 2.0 * m) - 0.5 * root,
                0.5 + 0.5 * root,
                0.5 - 0.5 * root,
                p.u() + p.ubar() * d.d(),
                p.ubar() * d.dbar()};
    return l;
}

double discord_from_lambdas(const DiscordLambdas &lambdas) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += xlog2x(lambdas.values[i]);
    for (std::size_t j = 4; j < 8; ++j) s -= xlog2x(lambdas.values[j]);
    return s;
}

double conditional_entropy(const DensityMatrix4 &rho, const MeasurementBloch &axis) {
    const double nx = std::sin(axis.theta) * std::cos(axis.phi);
    const double ny = std::sin(axis.theta) * std::sin(axis.phi);
    const double nz = std::cos(axis.theta);
    double total = 0.0;
    for (const double sign : {1.0, -1.0}) {
        // Projector (I + sign n.sigma) / 2.
        ComplexMatrix2 proj;
        proj(0, 0) = 0.5 * (1.0 + sign * nz);
        proj(1, 1) = 0.5 * (1.0 - sign * nz);
        proj(0, 1) = 0.5 * sign * cplx{nx, -ny};
        proj(1, 0) = 0.5 * sign * cplx{nx, ny};
        // Unnormalized post-measurement state of B: Tr_A[(P x I) rho].
        ComplexMatrix2 post;
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t bp = 0; bp < 2; ++bp) {
                cplx s = 0.0;
                for (std::size_t x = 0; x < 2; ++x)
                    for (std::size_t y = 0; y < 2; ++y) s += proj(y, x) * rho(2 * x + b, 2 * y + bp);
                post(b, bp) = s;
            }
        const double prob = post.trace().real();
        if (prob <= 1e-15) continue;
        post *= cplx{1.0 / prob};
        const auto spectrum = hermitian_eigenvalues_2x2(post);
        total += prob * entropy_of_spectrum(spectrum);
    }
    return total;
}

double mutual_information(const DensityMatrix4 &rho) {
    return von_neumann_entropy(reduced_a(rho)) + von_neumann_entropy(reduced_b(rho)) - von_neumann_entropy(rho);
}

DiscordSearch discord_bruteforce(const DensityMatrix4 &rho, const DiscordGrid &grid) {
    if (grid.theta_points < 2 || grid.phi_points < 1) throw std::invalid_argument("discord grid too small");
    const double t_step = kPi / (grid.theta_points - 1);
    const double p_step = 2.0 * kPi / grid.phi_points;

    MeasurementBloch best_axis;
    double best = std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.theta_points; ++i)
        for (int j = 0; j < grid.phi_points; ++j) {
            const MeasurementBloch axis{i * t_step, j * p_step};
            const double v = conditional_entropy(rho, axis);
            worst = std::max(worst, v);
            if (v < best) {
                best = v;
                best_axis = axis;
            }
        }
    const double range = worst - best;

    if (grid.refine) {
        const auto refined = search::nelder_mead(
            [&](const std::array<double, 2> &x) { return conditional_entropy(rho, {x[0], x[1]}); },
            std::array<double, 2>{best_axis.theta, best_axis.phi}, std::array<double, 2>{t_step, p_step},
            Tolerances::refine_step,
            Tolerances::refine_max_iterations);
        if (refined.value < best) {
            best = refined.value;
            best_axis = MeasurementBloch{refined.x[0], refined.x[1]};
        }
    }

    // -n and n describe the same measurement; fold theta into [0, pi].
    double theta = wrap_angle(best_axis.theta);
    double phi = best_axis.phi;
    if (theta > kPi) {
        theta = 2.0 * kPi - theta;
        phi += kPi;
    }
    phi = wrap_angle(phi);

    const double s_a = von_neumann_entropy(reduced_a(rho));
    const double s_ab = von_neumann_entropy(rho);
    return {s_a - s_ab + best, {theta, phi}, best, range};
}

}  // namespace qcorr
