#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lagwave/background.hpp"
#include "lagwave/diagnostics.hpp"
#include "lagwave/numerics.hpp"
#include "lagwave/solver.hpp"

using namespace lagwave;
using euler::FluidState;
using euler::GasParams;

TEST_CASE("relative entropy weight function") {
    CHECK(diag::phi_entropy(1.0) == 0.0);
    CHECK(diag::phi_entropy(0.3) > 0.0);
    CHECK(diag::phi_entropy(2.7) > 0.0);
    for (const double e : {1e-3, -1e-3, 5e-4}) {
        CHECK(std::abs(diag::phi_entropy(1.0 + e) - 0.5 * e * e) <= std::abs(e * e * e));
    }
    CHECK_THROWS_AS(diag::phi_entropy(0.0), std::domain_error);
    CHECK_THROWS_AS(diag::phi_entropy(-1.0), std::domain_error);
}

TEST_CASE("heat-kernel weight closed forms") {
    const diag::HeatKernelWeight w{0.37};
    const double d = 1e-6;

    SUBCASE("derivatives against finite differences") {
        for (const double t : {0.0, 2.0, 9.0}) {
            for (const double x : {-3.0, -0.4, 0.0, 1.7, 6.0}) {
                const double fd_x = (w.omega(x + d, t) - w.omega(x - d, t)) / (2 * d);
                const double fd_xx = (w.omega_x(x + d, t) - w.omega_x(x - d, t)) / (2 * d);
                const double fd_t = (w.omega(x, t + d) - w.omega(x, t - d)) / (2 * d);
                const double fd_gt = (w.g(x, t + d) - w.g(x, t - d)) / (2 * d);
                CHECK(w.omega_x(x, t) == doctest::Approx(fd_x).epsilon(1e-7));
                CHECK(w.omega_xx(x, t) == doctest::Approx(fd_xx).epsilon(1e-7));
                CHECK(w.omega_t(x, t) == doctest::Approx(fd_t).epsilon(1e-7));
                CHECK(w.g_t(x, t) == doctest::Approx(fd_gt).epsilon(1e-7));
            }
        }
    }

    SUBCASE("antiderivative against quadrature") {
        const double t = 3.0;
        for (const double x : {-1.5, 0.0, 2.5}) {
            const double q =
                num::adaptive_simpson([&](double y) { return w.omega(y, t); }, -40.0, x, 1e-12);
            CHECK(w.g(x, t) == doctest::Approx(q).epsilon(1e-10));
        }
    }

    SUBCASE("sup and total integral") {
        const double total = std::sqrt(std::numbers::pi / w.alpha);
        CHECK(w.g_sup() == doctest::Approx(total).epsilon(1e-14));
        CHECK(w.omega_integral() == doctest::Approx(total).epsilon(1e-14));
        CHECK(w.g(60.0, 0.0) == doctest::Approx(total).epsilon(1e-12));
        CHECK(w.g(-60.0, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("identity residuals vanish") {
        std::vector<double> xs, ts;
        for (int i = 0; i <= 40; ++i) xs.push_back(-8.0 + 0.4 * i);
        for (int j = 0; j <= 10; ++j) ts.push_back(j * 1.3);
        const auto r = diag::weight_identities_residual(w, xs, ts);
        CHECK(r.heat <= 1e-13);
        CHECK(r.flux <= 1e-13);
    }
}

TEST_CASE("weight parameter of a flat profile defaults to one") {
    const contact::ContactWaveSpec spec{1.0, 1.0, 1.0, 0.0};
    const GasParams g;
    const auto prof = contact::solve_selfsimilar(spec, g);
    CHECK(diag::weight_alpha_from_profile(prof) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("damped combination splits and totals") {
    const int n = 33;
    const double h = 0.125;
    sim::State s = sim::State::zeros(n);
    std::vector<double> u_bar(n);
    for (int i = 0; i < n; ++i) {
        const double x = -2.0 + i * h;
        s.u[i] = 0.4 * std::sin(x);
        s.E[i] = 0.2 * std::cos(2 * x);
        s.b[i] = 0.1 + 0.05 * x;
        u_bar[i] = 0.3 * std::tanh(x);
    }
    const auto c = diag::dissipative_combination(s, u_bar, h);
    std::vector<double> sq(n);
    for (int i = 0; i < n; ++i) {
        const double total = s.E[i] + s.u[i] * s.b[i];
        CHECK(c.total[i] == doctest::Approx(total).epsilon(1e-14));
        CHECK(c.e_part[i] + c.psi_b[i] + c.ubar_b[i] ==
              doctest::Approx(total).epsilon(1e-13));
        CHECK(c.ubar_b[i] == doctest::Approx(u_bar[i] * s.b[i]).epsilon(1e-14));
        sq[i] = total * total;
    }
    CHECK(c.l2 == doctest::Approx(std::sqrt(num::trapezoid(sq, h))).epsilon(1e-13));
}

TEST_CASE("dielectric thresholds") {
    const GasParams g;
    CHECK(diag::dielectric_bound_contact(1.0, 1.0, 1.0) == 0.015625);
    CHECK(diag::dielectric_bound_contact(1.0, 1.0, 2.0) ==
          doctest::Approx(0.015625 / 4).epsilon(1e-14));
    CHECK(std::isinf(diag::dielectric_bound_contact(1.0, 1.2, 0.0)));
    CHECK(std::isinf(diag::dielectric_bound_composite(1.0, 1.0, 1.0, 1.0, 0.0, 0.0, g)));
    const double c1 = diag::dielectric_bound_composite(0.9, 1.1, 0.9, 1.2, -0.3, 0.4, g);
    const double c2 = diag::dielectric_bound_composite(0.9, 1.1, 0.9, 1.2, -0.6, 0.8, g);
    CHECK(c1 > 0.0);
    CHECK(std::isfinite(c1));
    CHECK(c2 < c1);
}

TEST_CASE("decay exponent fit") {
    SUBCASE("recovers an exact power law") {
        std::vector<double> t, y;
        for (int i = 0; i <= 24; ++i) {
            const double ti = std::pow(10.0, 3.0 * i / 24.0) - 1.0;
            t.push_back(ti);
            y.push_back(std::pow(1.0 + ti, -1.3));
        }
        const auto fit = diag::decay_fit(t, y);
        CHECK(fit.exponent == doctest::Approx(-1.3).epsilon(1e-12));
        CHECK(fit.ci <= 1e-10);
    }

    SUBCASE("accepts a raw-time decade pair") {
        std::vector<double> t, y;
        for (int i = 0; i <= 19; ++i) {
            const double ti = 10.0 * std::pow(100.0, i / 19.0);
            t.push_back(ti);
            y.push_back(2.0 * std::pow(1.0 + ti, -0.25));
        }
        const auto fit = diag::decay_fit(t, y);
        CHECK(fit.exponent == doctest::Approx(-0.25).epsilon(1e-10));
    }

    SUBCASE("rejects degenerate input") {
        CHECK_THROWS_AS(diag::decay_fit({0.0, 10.0, 1000.0}, {1.0, 0.5, 0.1}),
                        std::invalid_argument);
        std::vector<double> t, y, y0;
        for (int i = 0; i <= 9; ++i) {
            t.push_back(100.0 + 20.0 * i);
            y.push_back(1.0 / (1.0 + t.back()));
            y0.push_back(i == 4 ? 0.0 : 1.0);
        }
        CHECK_THROWS_AS(diag::decay_fit(t, y), std::invalid_argument);
        std::vector<double> tw;
        for (int i = 0; i <= 9; ++i) tw.push_back(std::pow(10.0, 3.0 * i / 9.0));
        CHECK_THROWS_AS(diag::decay_fit(tw, y0), diag::DegenerateSeries);
    }
}

TEST_CASE("sup-norm deviation against a profile evaluator") {
    const sim::Grid1D grid{-4.0, 4.0, 65};
    const ConstantBackground bg(FluidState{1.2, 0.3, 0.9});
    const diag::ProfileFn fn = [&](double x, double t) { return bg.at(x, t); };
    sim::State s = sim::State::zeros(grid.n);
    s.t = 1.5;
    for (int i = 0; i < grid.n; ++i) {
        s.v[i] = 1.2;
        s.u[i] = 0.3;
        s.theta[i] = 0.9;
    }
    auto sups = diag::sup_norm_deviation(s, grid, fn);
    CHECK(sups.max_field() == 0.0);
    s.theta[10] += 0.02;
    s.E[3] = -0.4;
    sups = diag::sup_norm_deviation(s, grid, fn);
    CHECK(sups.theta == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(sups.E == 0.4);
    CHECK(sups.max_field() == 0.4);
}

TEST_CASE("energy report on an unperturbed state is zero") {
    const sim::Grid1D grid{-10.0, 10.0, 129};
    GasParams g;
    g.epsilon = 0.1;
    const ConstantBackground bg(FluidState{1.1, 0.2, 1.3});
    const sim::Solver solver(grid, g, &bg, {});
    const sim::State s = solver.init();
    const auto e = diag::energy_report(s, bg, diag::HeatKernelWeight{1.0}, grid, g);
    CHECK(e.t == 0.0);
    CHECK(e.max_sup() == 0.0);
    CHECK(e.l2_phi == 0.0);
    CHECK(e.h1_zeta == 0.0);
    CHECK(e.entropy_energy <= 1e-15);
    CHECK(e.maxwell_energy == 0.0);
    CHECK(e.weighted == 0.0);
}

TEST_CASE("energy report norms match hand quadrature") {
    const sim::Grid1D grid{-10.0, 10.0, 401};
    GasParams g;
    g.epsilon = 0.25;
    const ConstantBackground bg(FluidState{1.0, 0.0, 1.0});
    const sim::Solver solver(grid, g, &bg, {});
    sim::State s = solver.init();
    const double h = grid.h();
    std::vector<double> phi2(grid.n), e2(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double phi = 0.1 * std::exp(-x * x);
        s.v[i] += phi;
        s.E[i] = 0.05 * std::exp(-(x - 1) * (x - 1));
        phi2[i] = phi * phi;
        e2[i] = s.E[i] * s.E[i];
    }
    const auto e = diag::energy_report(s, bg, diag::HeatKernelWeight{1.0}, grid, g);
    CHECK(e.l2_phi == doctest::Approx(std::sqrt(num::trapezoid(phi2, h))).epsilon(1e-13));
    CHECK(e.l2_E ==
          doctest::Approx(std::sqrt(g.epsilon * num::trapezoid(e2, h))).epsilon(1e-13));
    CHECK(e.sup_phi == doctest::Approx(0.1).epsilon(1e-6));
    CHECK(e.entropy_energy > 0.0);
    CHECK(e.maxwell_energy > 0.0);
}

TEST_CASE("run monitor accumulates per-sample ledger entries") {
    const sim::Grid1D grid{-20.0, 20.0, 257};
    GasParams g;
    g.epsilon = 1.0;
    const ConstantBackground bg(FluidState{1.0, 0.0, 1.0});
    sim::SolverOptions opt;
    opt.scheme = sim::Scheme::Central;
    opt.relaxation = sim::Relaxation::Explicit;
    sim::Solver solver(grid, g, &bg, opt);
    sim::State s = solver.init(sim::GaussianBump{0.05, 1.0, 0.0});
    diag::RunMonitor::Options mopt;
    mopt.gradient_dissipation = true;
    diag::RunMonitor mon(solver, mopt);
    sim::run(solver, s, 1.0, 0.25, [&](const sim::State& st) { mon.sample(st); },
             mon.stage_hook());
    const auto& entries = mon.entries();
    REQUIRE(entries.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(entries[i].t == doctest::Approx(0.25 * i).epsilon(1e-12));
    CHECK(entries.front().diss_combo == 0.0);
    for (size_t i = 1; i < entries.size(); ++i) {
        CHECK(entries[i].diss_combo >= entries[i - 1].diss_combo);
        CHECK(entries[i].diss_grad >= entries[i - 1].diss_grad);
        CHECK(std::abs(entries[i].mass_residual) <= 1e-12);
        CHECK(std::abs(entries[i].maxwell_residual) <= 1e-2);
    }
}
