#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lagwave::num {

/// Compensated (Kahan) accumulator for long deterministic sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

/// Compensated trapezoid sum of nodal values on a uniform grid of spacing h.
double trapezoid(const std::vector<double>& f, double h);

/// Bracketed scalar root-find: bisection until the interval is small, then
/// Newton polished inside the bracket. f(lo) and f(hi) must have opposite
/// signs (or one of them be a root). Returns x with |f(x)| <= ftol or the
/// bracket narrowed to xtol.
double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi,
                     double xtol, double ftol, int max_iter = 200);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;  // standard error of the slope from residuals
};

/// Ordinary least squares y ~ intercept + slope*x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Dormand-Prince 5(4) adaptive step integrator for a fixed-size 2-vector
/// system y' = f(t, y). Integrates from t0 to t1 (either direction), landing
/// exactly on t1. rtol/atol control the embedded error estimate.
struct Ode2 {
    std::function<void(double, const double*, double*)> rhs;
    double rtol = 1e-12;
    double atol = 1e-14;

    void integrate(double t0, double t1, double y[2]) const;
};

}  // namespace lagwave::num
