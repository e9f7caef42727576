#pragma once

#include "lagwave/burgers.hpp"
#include "lagwave/contact_wave.hpp"
#include "lagwave/gas.hpp"
#include "lagwave/riemann.hpp"

namespace lagwave::composite {

/// One smooth approximate rarefaction: the sound-family speed on the fixed
/// isentrope through the anchor is slaved to the exact Burgers solution
/// evaluated at time 1+t.
struct RarefactionProfileSpec {
    int family = 1;  // 1 or 3
    euler::FluidState anchor;    // far-field end state the curve is anchored at
    euler::FluidState middle;    // intermediate state the wave connects to
    burgers::BurgersData data;   // w_l, w_r = lambda at the wave's endpoints

    bool degenerate() const {
        return data.strength() < euler::kDegenerateJump;
    }
};

/// Build the spec for the given family from a Riemann decomposition.
/// Family 1 runs from the left state to the minus middle state, family 3
/// from the plus middle state to the right state.
RarefactionProfileSpec make_rarefaction_spec(int family, const euler::FluidState& left,
                                             const euler::FluidState& right,
                                             const euler::RiemannDecomposition& d,
                                             const euler::GasParams& g);

/// Sampled values and derivatives of one rarefaction profile.
struct RarefactionPoint {
    double v, u, theta;
    double v_x, u_x, theta_x;
    double theta_xx;
    double v_t, u_t, theta_t;
};

RarefactionPoint rarefaction_profile(double x, double t, const RarefactionProfileSpec& spec,
                                     const euler::GasParams& g);

/// Exact self-similar rarefaction fan of the same family: constant states
/// outside [lambda(anchor), lambda(middle)] and the centred wave inside,
/// evaluated at similarity coordinate x/t.
RarefactionPoint rarefaction_fan(double x, double t, const RarefactionProfileSpec& spec,
                                 const euler::GasParams& g);

/// The composite background: contact layer built between the middle states
/// plus the two approximate rarefactions, superposed with the shared middle
/// constants removed.
class CompositeWave {
  public:
    CompositeWave(const euler::FluidState& left, const euler::FluidState& right,
                  const euler::GasParams& g, const contact::SolveOptions& opt = {});

    struct Point {
        double v, u, theta;
        double v_x, u_x, theta_x;
        double theta_xx;
        double v_t, u_t, theta_t;
    };

    Point at(double x, double t) const;

    /// Comparison profile with the smooth rarefactions replaced by exact
    /// fans (the time-asymptotic target of the composite pattern).
    Point fan_comparison(double x, double t) const;

    /// Total wave strength |v_+ - v_-| + |u_+ - u_-| + |theta_+ - theta_-|.
    double strength() const;

    const euler::RiemannDecomposition& decomposition() const { return decomp_; }
    const contact::SelfSimilarProfile& contact_profile_table() const { return ctab_; }
    const contact::ContactWaveSpec& contact_spec() const { return cspec_; }
    const RarefactionProfileSpec& rarefaction_minus() const { return rminus_; }
    const RarefactionProfileSpec& rarefaction_plus() const { return rplus_; }
    const euler::FluidState& left() const { return left_; }
    const euler::FluidState& right() const { return right_; }
    const euler::GasParams& gas() const { return gas_; }

  private:
    euler::FluidState left_, right_;
    euler::GasParams gas_;
    euler::RiemannDecomposition decomp_;
    contact::ContactWaveSpec cspec_;
    contact::SelfSimilarProfile ctab_;
    RarefactionProfileSpec rminus_, rplus_;
};

enum class Region { Minus, Centre, Plus };

/// Region of the (x,t) half-plane relative to the half-speed lines
/// 2x = lambda_-(middle_minus) t and 2x = lambda_+(middle_plus) t.
Region region_mask(double x, double t, const euler::RiemannDecomposition& d,
                   const euler::GasParams& g);

}  // namespace lagwave::composite
