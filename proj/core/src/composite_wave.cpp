#include "lagwave/composite_wave.hpp"

#include <cmath>
#include <stdexcept>

namespace lagwave::composite {

RarefactionProfileSpec make_rarefaction_spec(int family, const euler::FluidState& left,
                                             const euler::FluidState& right,
                                             const euler::RiemannDecomposition& d,
                                             const euler::GasParams& g) {
    RarefactionProfileSpec spec;
    spec.family = family;
    if (family == 1) {
        spec.anchor = left;
        spec.middle = d.middle_minus();
        spec.data.w_l = euler::lambda_on_isentrope(left, 1, left.v, g);
        spec.data.w_r = euler::lambda_on_isentrope(left, 1, d.vm_minus, g);
    } else if (family == 3) {
        spec.anchor = right;
        spec.middle = d.middle_plus();
        spec.data.w_l = euler::lambda_on_isentrope(right, 3, d.vm_plus, g);
        spec.data.w_r = euler::lambda_on_isentrope(right, 3, right.v, g);
    } else {
        throw std::invalid_argument("make_rarefaction_spec: family must be 1 or 3");
    }
    return spec;
}

namespace {

// Shared assembly of a profile point once V and the w-derivatives are known.
RarefactionPoint assemble(double v, double w, double w_x, double w_xx,
                          const RarefactionProfileSpec& spec, const euler::GasParams& g) {
    RarefactionPoint p{};
    const euler::FluidState& a = spec.anchor;
    p.v = v;
    p.u = euler::rarefaction_curve_velocity(a, spec.family, v, g);
    p.theta = euler::theta_on_isentrope(a, v, g);

    // lambda(V) = w on the isentrope, with dlambda/dv = -(gamma+1)/(2v) lambda.
    const double dlam = -(g.gamma + 1.0) / (2.0 * v) * w;
    p.v_x = w_x / dlam;
    p.u_x = -w * p.v_x;
    const double dtheta_dv = (1.0 - g.gamma) * p.theta / v;
    p.theta_x = dtheta_dv * p.v_x;

    // Second derivative of V from differentiating w_x = lambda'(V) V_x, then
    // theta_xx = Theta''(V) V_x^2 + Theta'(V) V_xx on the isentrope.
    const double d2lam = (g.gamma + 1.0) * (g.gamma + 3.0) / (4.0 * v * v) * w;
    const double v_xx = (w_xx - d2lam * p.v_x * p.v_x) / dlam;
    p.theta_xx = -g.gamma * (1.0 - g.gamma) * p.theta / (v * v) * p.v_x * p.v_x +
                 dtheta_dv * v_xx;

    // Burgers gives w_t = -w w_x, so every field rides locally at speed w.
    p.v_t = -w * p.v_x;
    p.u_t = -w * p.u_x;
    p.theta_t = -w * p.theta_x;
    return p;
}

RarefactionPoint constant_point(const euler::FluidState& s) {
    RarefactionPoint p{};
    p.v = s.v;
    p.u = s.u;
    p.theta = s.theta;
    return p;
}

}  // namespace

RarefactionPoint rarefaction_profile(double x, double t, const RarefactionProfileSpec& spec,
                                     const euler::GasParams& g) {
    if (spec.degenerate()) return constant_point(spec.anchor);
    const double tb = 1.0 + t;  // Burgers time argument of the construction
    const double w = burgers::evaluate(x, tb, spec.data);
    const double w_x = burgers::derivative(x, tb, spec.data);
    const double w_xx = burgers::second_derivative(x, tb, spec.data);

    // Invert lambda_family(V, s_anchor) = w: V = (K / w^2)^{1/(gamma+1)}.
    const double k = euler::isentrope_constant(spec.anchor, g);
    const double v = std::pow(k / (w * w), 1.0 / (g.gamma + 1.0));
    return assemble(v, w, w_x, w_xx, spec, g);
}

RarefactionPoint rarefaction_fan(double x, double t, const RarefactionProfileSpec& spec,
                                 const euler::GasParams& g) {
    if (spec.degenerate()) return constant_point(spec.anchor);
    if (t <= 0.0) {
        return x < 0.0 ? constant_point(spec.family == 1 ? spec.anchor : spec.middle)
                       : constant_point(spec.family == 1 ? spec.middle : spec.anchor);
    }
    const double xi = x / t;
    const double lo = spec.data.w_l;
    const double hi = spec.data.w_r;
    if (xi <= lo) {
        return constant_point(spec.family == 1 ? spec.anchor : spec.middle);
    }
    if (xi >= hi) {
        return constant_point(spec.family == 1 ? spec.middle : spec.anchor);
    }
    const double k = euler::isentrope_constant(spec.anchor, g);
    const double v = std::pow(k / (xi * xi), 1.0 / (g.gamma + 1.0));
    RarefactionPoint p{};
    p.v = v;
    p.u = euler::rarefaction_curve_velocity(spec.anchor, spec.family, v, g);
    p.theta = euler::theta_on_isentrope(spec.anchor, v, g);
    return p;
}

CompositeWave::CompositeWave(const euler::FluidState& left, const euler::FluidState& right,
                             const euler::GasParams& g, const contact::SolveOptions& opt)
    : left_(left), right_(right), gas_(g) {
    decomp_ = euler::solve_intermediate_states(left, right, g);
    cspec_.theta_minus = decomp_.thetam_minus;
    cspec_.theta_plus = decomp_.thetam_plus;
    cspec_.p_plus = decomp_.pm;
    cspec_.u_minus = decomp_.um;
    ctab_ = contact::solve_selfsimilar(cspec_, g, opt);
    rminus_ = make_rarefaction_spec(1, left, right, decomp_, g);
    rplus_ = make_rarefaction_spec(3, left, right, decomp_, g);
}

double CompositeWave::strength() const {
    return std::abs(right_.v - left_.v) + std::abs(right_.u - left_.u) +
           std::abs(right_.theta - left_.theta);
}

CompositeWave::Point CompositeWave::at(double x, double t) const {
    const contact::ContactPoint c = contact::contact_profile(x, t, ctab_, cspec_, gas_);
    const RarefactionPoint rm = rarefaction_profile(x, t, rminus_, gas_);
    const RarefactionPoint rp = rarefaction_profile(x, t, rplus_, gas_);

    Point p{};
    p.v = c.v + rm.v + rp.v - decomp_.vm_minus - decomp_.vm_plus;
    p.u = c.u + rm.u + rp.u - 2.0 * decomp_.um;
    p.theta = c.theta + rm.theta + rp.theta - decomp_.thetam_minus - decomp_.thetam_plus;
    p.v_x = c.v_x + rm.v_x + rp.v_x;
    p.u_x = c.u_x + rm.u_x + rp.u_x;
    p.theta_x = c.theta_x + rm.theta_x + rp.theta_x;
    p.theta_xx = c.theta_xx + rm.theta_xx + rp.theta_xx;
    p.v_t = c.v_t + rm.v_t + rp.v_t;
    p.u_t = c.u_t + rm.u_t + rp.u_t;
    p.theta_t = c.theta_t + rm.theta_t + rp.theta_t;
    return p;
}

CompositeWave::Point CompositeWave::fan_comparison(double x, double t) const {
    const contact::ContactPoint c = contact::contact_profile(x, t, ctab_, cspec_, gas_);
    const RarefactionPoint rm = rarefaction_fan(x, t, rminus_, gas_);
    const RarefactionPoint rp = rarefaction_fan(x, t, rplus_, gas_);
    Point p{};
    p.v = c.v + rm.v + rp.v - decomp_.vm_minus - decomp_.vm_plus;
    p.u = c.u + rm.u + rp.u - 2.0 * decomp_.um;
    p.theta = c.theta + rm.theta + rp.theta - decomp_.thetam_minus - decomp_.thetam_plus;
    return p;
}

Region region_mask(double x, double t, const euler::RiemannDecomposition& d,
                   const euler::GasParams& g) {
    const double lam_m = euler::lambda_on_isentrope(d.middle_minus(), 1, d.vm_minus, g);
    const double lam_p = euler::lambda_on_isentrope(d.middle_plus(), 3, d.vm_plus, g);
    if (2.0 * x < lam_m * t) return Region::Minus;
    if (2.0 * x > lam_p * t) return Region::Plus;
    return Region::Centre;
}

}  // namespace lagwave::composite
