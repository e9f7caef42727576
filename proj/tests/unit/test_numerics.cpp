#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lagwave/numerics.hpp"

using namespace lagwave;

TEST_CASE("kahan summation stays exact over a million terms") {
    num::KahanSum acc;
    for (int i = 0; i < 1000000; ++i) acc.add(0.1);
    CHECK(acc.value() == doctest::Approx(100000.0).epsilon(1e-14));
}

TEST_CASE("adaptive simpson reproduces closed-form integrals") {
    CHECK(num::adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(num::adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                                1e-12) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(num::adaptive_simpson([](double x) { return std::exp(-x * x); }, -10.0, 10.0,
                                1e-12) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("trapezoid matches the closed form for a linear integrand") {
    std::vector<double> f(101);
    for (int i = 0; i <= 100; ++i) f[i] = 3.0 * (0.01 * i) + 2.0;
    CHECK(num::trapezoid(f, 0.01) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("bracketed root find hits the dottie number") {
    const double root = num::bisect_newton([](double x) { return std::cos(x) - x; },
                                           [](double x) { return -std::sin(x) - 1.0; }, 0.0,
                                           1.0, 1e-15, 1e-15);
    CHECK(root == doctest::Approx(0.7390851332151607).epsilon(1e-12));
}

TEST_CASE("line fit recovers exact slope and intercept") {
    std::vector<double> x, y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(0.3 * i);
        y.push_back(3.0 * (0.3 * i) - 2.0);
    }
    const num::LineFit f = num::fit_line(x, y);
    CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(f.slope_se <= 1e-10);
}

TEST_CASE("two-vector integrator follows circular motion both ways") {
    num::Ode2 ode;
    ode.rhs = [](double, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    double y[2] = {0.0, 1.0};
    ode.integrate(0.0, 1.0, y);
    CHECK(y[0] == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
    CHECK(y[1] == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
    ode.integrate(1.0, 0.0, y);
    CHECK(std::abs(y[0]) <= 1e-9);
    CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-9));
}
