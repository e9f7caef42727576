#include <cmath>
#include <vector>

#include "doctest.h"
#include "lagwave/contact_wave.hpp"
#include "lagwave/numerics.hpp"

using namespace lagwave;
using euler::GasParams;

namespace {

const GasParams kGas;
const contact::ContactWaveSpec kSpec{1.0, 1.1, 1.0, 0.0};

const contact::SelfSimilarProfile& table() {
    static const contact::SelfSimilarProfile prof = contact::solve_selfsimilar(kSpec, kGas);
    return prof;
}

bool close(double a, double b, double abs_tol, double rel_tol) {
    return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("diffusion coefficient closed form") {
    CHECK(contact::diffusion_coefficient(kGas, 1.0) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("profile hits its boundary data and stays monotone") {
    const auto& prof = table();
    CHECK(prof.boundary_mismatch <= 1e-10);
    double th = 0, dth = 0;
    prof.eval(-prof.xi_max, th, dth);
    CHECK(th == doctest::Approx(kSpec.theta_minus).epsilon(1e-9));
    prof.eval(prof.xi_max, th, dth);
    CHECK(th == doctest::Approx(kSpec.theta_plus).epsilon(1e-9));
    for (std::size_t i = 1; i < prof.theta.size(); ++i)
        CHECK(prof.theta[i] >= prof.theta[i - 1] - 1e-13);
    for (const double d : prof.dtheta) CHECK(d >= -1e-12);
    for (const double v : prof.theta) {
        CHECK(v >= kSpec.theta_minus - 1e-9);
        CHECK(v <= kSpec.theta_plus + 1e-9);
    }
}

TEST_CASE("table satisfies the similarity equation by finite differences") {
    // a (ln Theta)'' = -xi Theta'/2, second derivative taken from the stored
    // values alone.
    const auto& prof = table();
    const int n = static_cast<int>(prof.xi.size());
    const double h = prof.xi[1] - prof.xi[0];
    double worst = 0.0;
    for (int i = 1; i + 1 < n; i += 7) {
        const double lhs = prof.a *
                           (std::log(prof.theta[i + 1]) - 2.0 * std::log(prof.theta[i]) +
                            std::log(prof.theta[i - 1])) /
                           (h * h);
        const double rhs = -0.5 * prof.xi[i] * prof.dtheta[i];
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("tabulated derivative is consistent with the values") {
    const auto& prof = table();
    const int n = static_cast<int>(prof.xi.size());
    const double h = prof.xi[1] - prof.xi[0];
    for (int i = 1; i + 1 < n; i += 11) {
        const double fd = (prof.theta[i + 1] - prof.theta[i - 1]) / (2.0 * h);
        CHECK(std::abs(prof.dtheta[i] - fd) <= 1e-6);
    }
}

TEST_CASE("physical profile solves the nonlinear diffusion equation") {
    // Independent explicit march of theta_t = a (theta_x/theta)_x started from
    // the profile at t = 0, compared against the profile at t = 3.
    const auto& prof = table();
    const double a = prof.a;
    const double L = 40.0, h = 0.05;
    const int n = 2 * static_cast<int>(L / h) + 1;
    auto theta_at = [&](double x, double t) {
        double th = 0, dth = 0;
        prof.eval(x / std::sqrt(1.0 + t), th, dth);
        return th;
    };
    std::vector<double> th(n), flux(n - 1);
    for (int i = 0; i < n; ++i) th[i] = theta_at(-L + i * h, 0.0);
    const double dt = 0.2 * h * h / a;
    double t = 0.0;
    while (t < 3.0 - 1e-12) {
        const double step = std::min(dt, 3.0 - t);
        for (int i = 0; i + 1 < n; ++i)
            flux[i] = (th[i + 1] - th[i]) / (h * 0.5 * (th[i] + th[i + 1]));
        for (int i = n - 2; i >= 1; --i) th[i] += step * a * (flux[i] - flux[i - 1]) / h;
        t += step;
    }
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(th[i] - theta_at(-L + i * h, 3.0)));
    CHECK(worst <= 2e-4);
}

TEST_CASE("contact point derivatives agree with finite differences") {
    const auto& prof = table();
    const double d = 1e-5;
    auto P = [&](double x, double t) {
        return contact::contact_profile(x, t, prof, kSpec, kGas);
    };
    // t >= d so the centered time stencil never asks for a negative time.
    for (const double t : {0.5, 4.0}) {
        for (const double x : {-3.0, -0.4, 0.0, 1.2, 5.0}) {
            const auto p = P(x, t);
            const auto xp = P(x + d, t), xm = P(x - d, t);
            const auto tp = P(x, t + d), tm = P(x, t - d);
            CHECK(close(p.v_x, (xp.v - xm.v) / (2 * d), 1e-7, 1e-5));
            CHECK(close(p.u_x, (xp.u - xm.u) / (2 * d), 1e-7, 1e-5));
            CHECK(close(p.theta_x, (xp.theta - xm.theta) / (2 * d), 1e-7, 1e-5));
            CHECK(close(p.theta_xx, (xp.theta_x - xm.theta_x) / (2 * d), 1e-5, 1e-4));
            CHECK(close(p.v_t, (tp.v - tm.v) / (2 * d), 1e-7, 1e-5));
            CHECK(close(p.u_t, (tp.u - tm.u) / (2 * d), 1e-7, 1e-5));
            CHECK(close(p.theta_t, (tp.theta - tm.theta) / (2 * d), 1e-7, 1e-5));
        }
    }
}

TEST_CASE("structural identities hold pointwise") {
    const auto& prof = table();
    for (const double t : {0.0, 2.0, 50.0}) {
        for (double x = -8.0; x <= 8.0 + 1e-9; x += 0.73) {
            const auto p = contact::contact_profile(x, t, prof, kSpec, kGas);
            CHECK(kGas.R * p.theta / p.v ==
                  doctest::Approx(kSpec.p_plus).epsilon(1e-13));
            CHECK(std::abs(p.v_t - p.u_x) <= 1e-14);
        }
    }
}

TEST_CASE("reference velocity enters additively") {
    const contact::ContactWaveSpec shifted{1.0, 1.1, 1.0, 0.7};
    const auto prof2 = contact::solve_selfsimilar(shifted, kGas);
    const auto a = contact::contact_profile(1.3, 2.0, table(), kSpec, kGas);
    const auto b = contact::contact_profile(1.3, 2.0, prof2, shifted, kGas);
    CHECK(b.u - a.u == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(b.v == doctest::Approx(a.v).epsilon(1e-10));
    CHECK(b.theta == doctest::Approx(a.theta).epsilon(1e-10));
}

TEST_CASE("residuals match direct evaluation of the viscous operators") {
    // R1 = u_t - mu (u_x/v)_x (the pressure is constant); R2 = R/(gamma-1)
    // theta_t + p u_x - kappa (theta_x/v)_x - mu u_x^2 / v. Every derivative
    // on the right is approximated from profile values alone.
    const auto& prof = table();
    const double d = 1e-4;
    auto P = [&](double x, double t) {
        return contact::contact_profile(x, t, prof, kSpec, kGas);
    };
    for (const double t : {1.0, 6.0}) {
        for (const double x : {-2.0, 0.0, 0.9, 3.1}) {
            const auto xp = P(x + d, t), xm = P(x - d, t);
            const auto tp = P(x, t + d), tm = P(x, t - d);
            const auto p = P(x, t);
            const double u_t = (tp.u - tm.u) / (2 * d);
            const double visc = (xp.u_x / xp.v - xm.u_x / xm.v) / (2 * d);
            const double r1_direct = u_t - kGas.mu * visc;
            const double theta_t = (tp.theta - tm.theta) / (2 * d);
            const double heat = (xp.theta_x / xp.v - xm.theta_x / xm.v) / (2 * d);
            const double r2_direct = kGas.R / (kGas.gamma - 1.0) * theta_t +
                                     kSpec.p_plus * p.u_x - kGas.kappa * heat -
                                     kGas.mu * p.u_x * p.u_x / p.v;
            const auto r = contact::contact_residuals(x, t, prof, kSpec, kGas);
            CHECK(close(r.r1, r1_direct, 1e-8, 1e-3));
            // The conduction and compression terms cancel down to the small
            // viscous-heating remainder, so the difference quotients are only
            // trustworthy to their noise floor on the large terms.
            const double term_scale = std::abs(kGas.R / (kGas.gamma - 1.0) * theta_t) +
                                      std::abs(kSpec.p_plus * p.u_x) +
                                      std::abs(kGas.kappa * heat);
            CHECK(std::abs(r.r2 - r2_direct) <= 5e-8 + 3e-5 * term_scale);
            // Assembling the same operator from the profile's derivative
            // fields (themselves checked elsewhere) must agree to rounding.
            const double heat_x = p.theta_xx / p.v - p.theta_x * p.v_x / (p.v * p.v);
            const double r2_exact = kGas.R / (kGas.gamma - 1.0) * p.theta_t +
                                    kSpec.p_plus * p.u_x - kGas.kappa * heat_x -
                                    kGas.mu * p.u_x * p.u_x / p.v;
            CHECK(std::abs(r.r2 - r2_exact) <= 1e-14);
        }
    }
}

TEST_CASE("sup-norm residuals decay in time") {
    const auto& prof = table();
    const auto r10 = contact::residual_sup_norms(10.0, prof, kSpec, kGas);
    const auto r100 = contact::residual_sup_norms(100.0, prof, kSpec, kGas);
    CHECK(r100.r1 < 0.1 * r10.r1);
    CHECK(r100.r2 < 0.05 * r10.r2);
}

TEST_CASE("l2 norms of profile derivatives match direct quadrature") {
    const auto& prof = table();
    const double t = 4.0;
    auto integrand = [&](contact::ProfileField f) {
        return [&, f](double x) {
            const auto p = contact::contact_profile(x, t, prof, kSpec, kGas);
            const double val = f == contact::ProfileField::Theta ? p.theta_x : p.u_x;
            return val * val;
        };
    };
    const double theta_direct = std::sqrt(num::adaptive_simpson(
        integrand(contact::ProfileField::Theta), -80.0, 80.0, 1e-13));
    // u_x^2 is bimodal with a zero at the origin; integrate each lobe
    // separately so the quadrature's first samples see the bumps.
    const auto u2 = integrand(contact::ProfileField::U);
    const double u_direct =
        std::sqrt(num::adaptive_simpson(u2, -80.0, -8.0, 1e-15) +
                  num::adaptive_simpson(u2, -8.0, 0.0, 1e-15) +
                  num::adaptive_simpson(u2, 0.0, 8.0, 1e-15) +
                  num::adaptive_simpson(u2, 8.0, 80.0, 1e-15));
    CHECK(contact::profile_deriv_l2norm(prof, kSpec, kGas, contact::ProfileField::Theta, 1,
                                        t) == doctest::Approx(theta_direct).epsilon(1e-6));
    CHECK(contact::profile_deriv_l2norm(prof, kSpec, kGas, contact::ProfileField::U, 1, t) ==
          doctest::Approx(u_direct).epsilon(1e-6));
    // V is slaved to Theta through the constant pressure.
    CHECK(contact::profile_deriv_l2norm(prof, kSpec, kGas, contact::ProfileField::V, 1, t) ==
          doctest::Approx(kGas.R / kSpec.p_plus * theta_direct).epsilon(1e-10));
}

TEST_CASE("gaussian envelope curvature sits in the theoretical window") {
    // The far-field linearizations give |Theta'| ~ exp(-theta_pm xi^2 / (4a)),
    // so the fitted curvature must land between those two values.
    const auto& prof = table();
    const auto fit = contact::fit_gaussian_envelope(prof, kSpec.delta());
    const double lo = kSpec.theta_minus / (4.0 * prof.a);
    const double hi = kSpec.theta_plus / (4.0 * prof.a);
    CHECK(fit.c_hat >= 0.9 * lo);
    CHECK(fit.c_hat <= 1.1 * hi);
    CHECK(fit.c1 > 0.0);
}

TEST_CASE("zero-strength data produce the constant profile") {
    const contact::ContactWaveSpec flat{1.0, 1.0, 1.0, 0.3};
    const auto prof = contact::solve_selfsimilar(flat, kGas);
    CHECK(prof.constant());
    const auto p = contact::contact_profile(2.0, 1.0, prof, flat, kGas);
    CHECK(p.v == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.u == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(p.theta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.v_x == 0.0);
    CHECK(p.theta_t == 0.0);
    const auto r = contact::residual_sup_norms(5.0, prof, flat, kGas);
    CHECK(r.r1 == 0.0);
    CHECK(r.r2 == 0.0);
}
