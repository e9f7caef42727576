#pragma once

#include <stdexcept>

#include "lagwave/gas.hpp"

namespace lagwave::euler {

/// Threshold below which a wave jump is treated as zero-strength rather than
/// a genuine rarefaction. Shared by the curve evaluations and the composite
/// construction.
inline constexpr double kDegenerateJump = 1e-12;

/// Intermediate states of the two-rarefactions-around-a-contact pattern.
/// The 1-family rarefaction connects the left state to (vm_minus, um,
/// thetam_minus), the contact joins the two middle states at common pressure
/// pm and velocity um, and the 3-family rarefaction connects
/// (vm_plus, um, thetam_plus) to the right state.
struct RiemannDecomposition {
    double vm_minus = 0, vm_plus = 0;
    double um = 0;
    double thetam_minus = 0, thetam_plus = 0;
    double pm = 0;

    FluidState middle_minus() const { return {vm_minus, um, thetam_minus}; }
    FluidState middle_plus() const { return {vm_plus, um, thetam_plus}; }
};

struct NoR1CR3Solution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Velocity along the rarefaction curve of the given family through the
/// anchor state, evaluated at target_v >= anchor.v. Uses the closed-form
/// antiderivative of lambda on the fixed isentrope:
///   family 1: u = u_a - 2 sqrt(gamma R theta_a)/(gamma-1) [ (v_a/v)^{(gamma-1)/2} - 1 ]
///   family 3: u = u_a + 2 sqrt(gamma R theta_a)/(gamma-1) [ (v_a/v)^{(gamma-1)/2} - 1 ]
double rarefaction_curve_velocity(const FluidState& anchor, int family, double target_v,
                                  const GasParams& g);

/// Solve for the intermediate states connecting left and right through a
/// 1-rarefaction, contact, 3-rarefaction pattern. Scalar bracketed
/// bisection-then-Newton on the common pressure pm; velocity-match residual
/// tolerance 1e-12. Throws NoR1CR3Solution when the data do not admit two
/// expansive waves.
RiemannDecomposition solve_intermediate_states(const FluidState& left,
                                               const FluidState& right,
                                               const GasParams& g);

}  // namespace lagwave::euler
