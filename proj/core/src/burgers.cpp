#include "lagwave/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lagwave/numerics.hpp"

namespace lagwave::burgers {

double initial_value(double x, const BurgersData& d) {
    return 0.5 * (d.w_r + d.w_l) + 0.5 * (d.w_r - d.w_l) * std::tanh(x);
}

double initial_derivative(double x, const BurgersData& d) {
    const double th = std::tanh(x);
    return 0.5 * (d.w_r - d.w_l) * (1.0 - th * th);
}

namespace {

double initial_second_derivative(double x, const BurgersData& d) {
    const double th = std::tanh(x);
    return -(d.w_r - d.w_l) * th * (1.0 - th * th);
}

}  // namespace

double foot_point(double x, double t, const BurgersData& d) {
    if (t < 0) throw std::domain_error("foot_point: t must be nonnegative");
    if (!d.valid()) throw std::invalid_argument("foot_point: w_l > w_r");
    if (t == 0.0 || d.strength() == 0.0) return x - t * d.w_l;

    // x0 + t w0(x0) is strictly increasing in x0; safeguarded Newton on the
    // bracket from the data bounds. Unsafeguarded Newton two-cycles across the
    // layer for large t, so a step is accepted only when it keeps halving the
    // progress made two iterations ago; otherwise the bracket is bisected.
    double lo = x - t * d.w_r;
    double hi = x - t * d.w_l;
    const double xtol = 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
    double x0 = 0.5 * (lo + hi);
    double step_old = hi - lo;
    double step = step_old;
    for (int it = 0; it < 240; ++it) {
        const double f = x0 + t * initial_value(x0, d) - x;
        if (f == 0.0) return x0;
        if (f > 0.0) {
            hi = x0;
        } else {
            lo = x0;
        }
        if (hi - lo <= xtol) return 0.5 * (lo + hi);
        const double df = 1.0 + t * initial_derivative(x0, d);
        const double newton = x0 - f / df;
        const bool take_newton =
            newton > lo && newton < hi && 2.0 * std::abs(f) <= std::abs(step_old * df);
        step_old = step;
        if (take_newton) {
            step = newton - x0;
            x0 = newton;
        } else {
            step = 0.5 * (hi - lo);
            x0 = 0.5 * (lo + hi);
        }
        if (std::abs(step) <= xtol) return x0;
    }
    return 0.5 * (lo + hi);
}

double evaluate(double x, double t, const BurgersData& d) {
    if (d.strength() == 0.0) return d.w_l;
    return initial_value(foot_point(x, t, d), d);
}

double derivative(double x, double t, const BurgersData& d) {
    if (d.strength() == 0.0) return 0.0;
    const double w0p = initial_derivative(foot_point(x, t, d), d);
    return w0p / (1.0 + t * w0p);
}

double second_derivative(double x, double t, const BurgersData& d) {
    if (d.strength() == 0.0) return 0.0;
    const double x0 = foot_point(x, t, d);
    const double j = 1.0 + t * initial_derivative(x0, d);
    return initial_second_derivative(x0, d) / (j * j * j);
}

double fan_value(double xi, const BurgersData& d) {
    return std::clamp(xi, d.w_l, d.w_r);
}

double norm_domain_half_width(double t, const BurgersData& d) {
    return 10.0 + std::abs(d.w_l) * t + std::abs(d.w_r) * t + 20.0;
}

double lq_norm_of_derivative(double t, double q, const BurgersData& d) {
    if (t < 0) throw std::domain_error("lq_norm_of_derivative: t must be nonnegative");
    if (d.strength() == 0.0) return 0.0;

    if (q == kInfNorm) {
        // The derivative transported to time t is largest where the initial
        // slope is largest; sample foot points around the data layer and
        // refine around the best candidate.
        double best = 0.0;
        double best_x0 = 0.0;
        const int n = 2001;
        for (int i = 0; i < n; ++i) {
            const double x0 = -25.0 + 50.0 * i / (n - 1);
            const double w0p = initial_derivative(x0, d);
            const double wx = w0p / (1.0 + t * w0p);
            if (wx > best) {
                best = wx;
                best_x0 = x0;
            }
        }
        double lo = best_x0 - 0.05, hi = best_x0 + 0.05;
        for (int pass = 0; pass < 60; ++pass) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            const auto val = [&](double x0) {
                const double w0p = initial_derivative(x0, d);
                return w0p / (1.0 + t * w0p);
            };
            if (val(m1) < val(m2)) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        const double w0p = initial_derivative(0.5 * (lo + hi), d);
        return std::max(best, w0p / (1.0 + t * w0p));
    }

    if (q < 1.0) throw std::domain_error("lq_norm_of_derivative: q must be >= 1");
    const double L = norm_domain_half_width(t, d);
    const auto integrand = [&](double x) { return std::pow(derivative(x, t, d), q); };
    // Split at the layer center transported by the mean speed to help the
    // adaptive refinement find the concentration region.
    const double c = 0.5 * (d.w_l + d.w_r) * t;
    const double tol = 1e-12 * std::max(1.0, std::pow(d.strength(), q));
    const double integral = num::adaptive_simpson(integrand, -L, c, tol) +
                            num::adaptive_simpson(integrand, c, L, tol);
    return std::pow(integral, 1.0 / q);
}

}  // namespace lagwave::burgers
