#include "lagwave/riemann.hpp"

#include <cmath>

#include "lagwave/numerics.hpp"

namespace lagwave::euler {

double rarefaction_curve_velocity(const FluidState& anchor, int family, double target_v,
                                  const GasParams& g) {
    if (family != 1 && family != 3) {
        throw std::invalid_argument("rarefaction_curve_velocity: family must be 1 or 3");
    }
    if (target_v < anchor.v * (1.0 - kDegenerateJump)) {
        throw std::domain_error("rarefaction_curve_velocity: target_v below anchor volume");
    }
    const double bracket =
        std::pow(anchor.v / target_v, 0.5 * (g.gamma - 1.0)) - 1.0;  // <= 0 for v >= v_a
    const double coef = 2.0 * std::sqrt(g.gamma * g.R * anchor.theta) / (g.gamma - 1.0);
    return family == 1 ? anchor.u - coef * bracket : anchor.u + coef * bracket;
}

namespace {

// Velocity of the middle state reached from the left state along the 1-curve
// when the common pressure is pm. Strictly decreasing in pm.
double u_from_left(const FluidState& left, double pm, const GasParams& g) {
    const double pl = pressure(left, g);
    const double r = std::pow(pm / pl, (g.gamma - 1.0) / (2.0 * g.gamma));
    return left.u + 2.0 * std::sqrt(g.gamma * g.R * left.theta) / (g.gamma - 1.0) * (1.0 - r);
}

// Velocity of the middle state reached from the right state along the
// 3-curve. Strictly increasing in pm.
double u_from_right(const FluidState& right, double pm, const GasParams& g) {
    const double pr = pressure(right, g);
    const double r = std::pow(pm / pr, (g.gamma - 1.0) / (2.0 * g.gamma));
    return right.u - 2.0 * std::sqrt(g.gamma * g.R * right.theta) / (g.gamma - 1.0) * (1.0 - r);
}

}  // namespace

RiemannDecomposition solve_intermediate_states(const FluidState& left,
                                               const FluidState& right,
                                               const GasParams& g) {
    if (!left.valid() || !right.valid() || !g.valid()) {
        throw std::invalid_argument("solve_intermediate_states: invalid inputs");
    }
    const double pl = pressure(left, g);
    const double pr = pressure(right, g);
    const double p_hi = std::min(pl, pr);
    constexpr double ftol = 1e-12;  // velocity-match residual tolerance

    const auto mismatch = [&](double pm) {
        return u_from_left(left, pm, g) - u_from_right(right, pm, g);
    };
    const auto dmismatch = [&](double pm) {
        // d/dpm of each branch; both contribute with the same sign.
        const double cl = std::sqrt(g.gamma * g.R * left.theta) / g.gamma;
        const double cr = std::sqrt(g.gamma * g.R * right.theta) / g.gamma;
        const double tl = std::pow(pm / pl, (g.gamma - 1.0) / (2.0 * g.gamma)) / pm;
        const double tr = std::pow(pm / pr, (g.gamma - 1.0) / (2.0 * g.gamma)) / pm;
        return -(cl * tl + cr * tr);
    };

    double pm;
    const double f_hi = mismatch(p_hi);
    if (std::abs(f_hi) <= ftol) {
        // Degenerate: at least one rarefaction has zero strength.
        pm = p_hi;
    } else if (f_hi > 0.0) {
        throw NoR1CR3Solution(
            "solve_intermediate_states: data require a compressive wave (no bracket above "
            "pm = min(p_left, p_right))");
    } else {
        // mismatch is decreasing in pm; find a lower bracket end with f > 0.
        double p_lo = p_hi;
        double f_lo = f_hi;
        for (int k = 0; k < 600 && f_lo <= 0.0; ++k) {
            p_lo *= 0.5;
            f_lo = mismatch(p_lo);
        }
        if (f_lo <= 0.0) {
            throw NoR1CR3Solution(
                "solve_intermediate_states: velocity gap too large (vacuum-like data)");
        }
        pm = num::bisect_newton(mismatch, dmismatch, p_lo, p_hi, 0.0, ftol);
    }

    RiemannDecomposition d;
    d.pm = pm;
    d.vm_minus = left.v * std::pow(pl / pm, 1.0 / g.gamma);
    d.vm_plus = right.v * std::pow(pr / pm, 1.0 / g.gamma);
    d.um = 0.5 * (u_from_left(left, pm, g) + u_from_right(right, pm, g));
    d.thetam_minus = pm * d.vm_minus / g.R;
    d.thetam_plus = pm * d.vm_plus / g.R;

    if (d.vm_minus < left.v * (1.0 - kDegenerateJump) ||
        d.vm_plus < right.v * (1.0 - kDegenerateJump)) {
        throw NoR1CR3Solution("solve_intermediate_states: recovered waves are not expansive");
    }
    return d;
}

}  // namespace lagwave::euler
