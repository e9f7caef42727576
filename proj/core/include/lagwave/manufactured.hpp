#pragma once

#include <cmath>
#include <numbers>

#include "lagwave/background.hpp"
#include "lagwave/gas.hpp"

namespace lagwave::sim {

/// Smooth periodic-in-x reference fields with the source terms that make them
/// an exact solution of the governing equations. Used to measure the scheme's
/// convergence order against a known answer.
struct ManufacturedCase {
    euler::GasParams gas{.epsilon = 0.5};
    double k = 2.0 * std::numbers::pi / 5.0;
    double omega = 1.0;

    BackgroundPoint fields(double x, double t) const {
        const double sk = std::sin(k * x), ck = std::cos(k * x);
        const double st = std::sin(omega * t), ct = std::cos(omega * t);
        BackgroundPoint p;
        p.v = 2.0 + 0.2 * sk * ct;
        p.u = 0.3 * ck * st;
        p.theta = 1.5 + 0.2 * ck * ct;
        p.E = 0.1 * sk * st;
        p.b = 0.1 * ck * ct;

        p.v_x = 0.2 * k * ck * ct;
        p.u_x = -0.3 * k * sk * st;
        p.theta_x = -0.2 * k * sk * ct;
        p.theta_xx = -0.2 * k * k * ck * ct;

        p.v_t = -0.2 * omega * sk * st;
        p.u_t = 0.3 * omega * ck * ct;
        p.theta_t = -0.2 * omega * ck * st;
        p.E_t = 0.1 * omega * sk * ct;
        p.b_t = -0.1 * omega * ck * st;
        return p;
    }

    /// Residual of each governing equation at the reference fields, in the
    /// order (v, u, theta, E, b) and at the scaling the equations are written:
    /// the theta entry multiplies theta_t by R/(gamma-1) and the E entry
    /// multiplies E_t by epsilon.
    void forcing(double x, double t, double f[5]) const {
        const double sk = std::sin(k * x), ck = std::cos(k * x);
        const double st = std::sin(omega * t), ct = std::cos(omega * t);
        const BackgroundPoint p = fields(x, t);
        const double u_xx = -0.3 * k * k * ck * st;
        const double E_x = 0.1 * k * ck * st;
        const double b_x = -0.1 * k * sk * ct;

        const double v = p.v, u = p.u, th = p.theta;
        const double pres = gas.R * th / v;
        const double pres_x = gas.R * (p.theta_x * v - th * p.v_x) / (v * v);
        const double visc = gas.mu * (u_xx / v - p.u_x * p.v_x / (v * v));
        const double heat = gas.kappa * (p.theta_xx / v - p.theta_x * p.v_x / (v * v));
        const double emf = p.E + u * p.b;

        f[0] = p.v_t - p.u_x;
        f[1] = p.u_t + pres_x - visc + v * emf * p.b;
        f[2] = gas.R / (gas.gamma - 1.0) * p.theta_t + pres * p.u_x - heat -
               gas.mu * p.u_x * p.u_x / v - v * emf * emf;
        f[3] = gas.epsilon * (p.E_t - u / v * E_x) - b_x / v + emf;
        f[4] = p.b_t - u / v * b_x - E_x / v;
    }
};

}  // namespace lagwave::sim
