#pragma once

#include <stdexcept>

namespace lagwave::burgers {

/// Monotone tanh data for the inviscid Burgers equation w_t + w w_x = 0:
///   w(x,0) = (w_r+w_l)/2 + (w_r-w_l)/2 * tanh(x).
/// Requires w_l <= w_r; the smooth solution then exists globally and is
/// evaluated exactly by the method of characteristics.
struct BurgersData {
    double w_l = 0.0;
    double w_r = 0.0;

    double strength() const { return w_r - w_l; }
    bool valid() const { return w_l <= w_r; }
};

double initial_value(double x, const BurgersData& d);
double initial_derivative(double x, const BurgersData& d);

/// Characteristic foot point x0 solving x = x0 + t * w(x0,0). Monotone
/// bracketed Newton, tolerance 1e-13 in x0.
double foot_point(double x, double t, const BurgersData& d);

/// w(x,t), exact smooth solution for t >= 0.
double evaluate(double x, double t, const BurgersData& d);

/// Spatial derivative w_x(x,t) = w0'(x0) / (1 + t w0'(x0)) > 0.
double derivative(double x, double t, const BurgersData& d);

/// Second spatial derivative w_xx(x,t) = w0''(x0) / (1 + t w0'(x0))^3.
double second_derivative(double x, double t, const BurgersData& d);

/// ||w_x(.,t)||_{L^q}. Finite q uses adaptive quadrature over a truncated
/// domain sized from the exponential tail bounds; q = infinity (pass
/// q = kInfNorm) takes the max over an adaptive sample refined where the
/// derivative concentrates.
inline constexpr double kInfNorm = -1.0;
double lq_norm_of_derivative(double t, double q, const BurgersData& d);

/// Riemann fan limit w^r(x/t): w_l below the fan, x/t inside, w_r above.
double fan_value(double xi, const BurgersData& d);

/// Truncation half-width used for the norm quadratures.
double norm_domain_half_width(double t, const BurgersData& d);

}  // namespace lagwave::burgers
