#include <cmath>

#include "doctest.h"
#include "lagwave/numerics.hpp"
#include "lagwave/riemann.hpp"

using namespace lagwave;
using euler::FluidState;
using euler::GasParams;

TEST_CASE("sound speed agrees between its two closed forms") {
    const GasParams g;
    const FluidState s{2.0, 0.4, 3.0};
    const auto c = euler::characteristic_speeds(s, g);
    CHECK(c.lambda2 == 0.0);
    CHECK(c.lambda3 == doctest::Approx(std::sqrt(g.gamma * g.R * s.theta) / s.v).epsilon(1e-15));
    CHECK(c.lambda1 == doctest::Approx(-c.lambda3).epsilon(1e-15));
    CHECK(euler::lambda_on_isentrope(s, 3, s.v, g) == doctest::Approx(c.lambda3).epsilon(1e-14));
    CHECK(euler::lambda_on_isentrope(s, 1, s.v, g) == doctest::Approx(c.lambda1).epsilon(1e-14));
}

TEST_CASE("isentrope evaluations keep the physical entropy constant") {
    const GasParams g;
    const FluidState a{0.8, 0.3, 1.4};
    const double s0 = euler::entropy(a, g);
    for (const double v : {0.9, 1.1, 1.6, 2.4}) {
        const FluidState b{v, 0.0, euler::theta_on_isentrope(a, v, g)};
        CHECK(euler::entropy(b, g) == doctest::Approx(s0).epsilon(1e-12));
        CHECK(euler::pressure_on_isentrope(a, v, g) ==
              doctest::Approx(euler::pressure(b, g)).epsilon(1e-12));
    }
}

TEST_CASE("rarefaction curve velocity matches the quadrature of the sound speed") {
    // Along the curve du/dv = -lambda_family(v) on the anchor's isentrope;
    // integrate that speed numerically and compare with the closed form.
    const GasParams g;
    const FluidState a{0.9, 0.25, 1.3};
    for (const int family : {1, 3}) {
        for (const double v : {1.0, 1.4, 2.0}) {
            const double quad = num::adaptive_simpson(
                [&](double s) { return -euler::lambda_on_isentrope(a, family, s, g); }, a.v, v,
                1e-13);
            const double expect = a.u + quad;
            CHECK(euler::rarefaction_curve_velocity(a, family, v, g) ==
                  doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("symmetric diverging data produce a symmetric decomposition") {
    const GasParams g;
    const FluidState left{1.0, -0.1, 1.0}, right{1.0, 0.1, 1.0};
    const auto d = euler::solve_intermediate_states(left, right, g);
    CHECK(std::abs(d.um) <= 1e-12);
    CHECK(d.vm_minus == doctest::Approx(d.vm_plus).epsilon(1e-12));
    CHECK(d.thetam_minus == doctest::Approx(d.thetam_plus).epsilon(1e-12));
    CHECK(d.pm < euler::pressure(left, g));
    CHECK(d.vm_minus >= left.v);
    CHECK(d.vm_plus >= right.v);
    CHECK(d.pm == doctest::Approx(g.R * d.thetam_minus / d.vm_minus).epsilon(1e-12));
}

TEST_CASE("identical end states give two zero-strength waves") {
    const GasParams g;
    const FluidState s{1.2, 0.3, 0.9};
    const auto d = euler::solve_intermediate_states(s, s, g);
    CHECK(d.pm == doctest::Approx(euler::pressure(s, g)).epsilon(1e-12));
    CHECK(d.um == doctest::Approx(s.u).epsilon(1e-12));
    CHECK(d.vm_minus == doctest::Approx(s.v).epsilon(1e-12));
    CHECK(d.vm_plus == doctest::Approx(s.v).epsilon(1e-12));
}

TEST_CASE("colliding streams admit no double-expansion pattern") {
    const GasParams g;
    const FluidState left{1.0, 0.5, 1.0}, right{1.0, -0.5, 1.0};
    CHECK_THROWS_AS(euler::solve_intermediate_states(left, right, g), euler::NoR1CR3Solution);
}

TEST_CASE("decomposition states sit on the correct rarefaction curves") {
    const GasParams g;
    const FluidState left{0.9, -0.05, 1.05}, right{1.05, 0.08, 1.1};
    const auto d = euler::solve_intermediate_states(left, right, g);
    CHECK(d.um == doctest::Approx(
                      euler::rarefaction_curve_velocity(left, 1, d.vm_minus, g)).epsilon(1e-11));
    CHECK(d.um == doctest::Approx(
                      euler::rarefaction_curve_velocity(right, 3, d.vm_plus, g)).epsilon(1e-11));
    CHECK(d.thetam_minus ==
          doctest::Approx(euler::theta_on_isentrope(left, d.vm_minus, g)).epsilon(1e-11));
    CHECK(d.thetam_plus ==
          doctest::Approx(euler::theta_on_isentrope(right, d.vm_plus, g)).epsilon(1e-11));
}
