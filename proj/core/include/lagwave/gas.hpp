#pragma once

#include <cmath>
#include <stdexcept>

namespace lagwave::euler {

/// Physical constants of the polytropic gas and the field coupling.
///
/// mu is the total viscosity (shear + bulk combination entering the 1D
/// momentum equation), kappa the heat conductivity, epsilon the dielectric
/// constant of the Maxwell subsystem. A is the entropy reference constant;
/// it only shifts the entropy by an additive constant and cancels in every
/// physical quantity, so the default A=1 is used throughout.
struct GasParams {
    double R = 1.0;
    double gamma = 5.0 / 3.0;
    double mu = 1.0;
    double kappa = 1.0;
    double epsilon = 1.0;
    double A = 1.0;

    bool valid() const {
        return R > 0 && gamma > 1 && mu > 0 && kappa > 0 && epsilon > 0 && A > 0;
    }
};

/// One fluid state in Lagrangian variables: specific volume v = 1/rho,
/// velocity u, absolute temperature theta.
struct FluidState {
    double v = 1.0;
    double u = 0.0;
    double theta = 1.0;

    bool valid() const { return v > 0 && theta > 0; }
};

/// p = R theta / v.
inline double pressure(const FluidState& s, const GasParams& g) {
    return g.R * s.theta / s.v;
}

/// s = R/(gamma-1) ln(R theta / A) + R ln v.
inline double entropy(const FluidState& s, const GasParams& g) {
    return g.R / (g.gamma - 1.0) * std::log(g.R * s.theta / g.A) + g.R * std::log(s.v);
}

struct CharacteristicSpeeds {
    double lambda1;  // -sqrt(gamma p / v) < 0
    double lambda2;  // 0 (contact family)
    double lambda3;  // +sqrt(gamma p / v) > 0
};

inline CharacteristicSpeeds characteristic_speeds(const FluidState& s, const GasParams& g) {
    const double c = std::sqrt(g.gamma * pressure(s, g) / s.v);
    return {-c, 0.0, c};
}

/// gamma p_a v_a^gamma, the constant gamma*A*exp((gamma-1)s/R) of the
/// isentrope through the anchor state. lambda_{+-}^2 = K * v^{-(gamma+1)}.
inline double isentrope_constant(const FluidState& anchor, const GasParams& g) {
    return g.gamma * pressure(anchor, g) * std::pow(anchor.v, g.gamma);
}

/// Sound-family speed lambda_{+-}(v, s) evaluated on the isentrope through
/// the anchor state. family is 1 (lambda_- branch) or 3 (lambda_+ branch).
inline double lambda_on_isentrope(const FluidState& anchor, int family, double v,
                                  const GasParams& g) {
    const double k = isentrope_constant(anchor, g);
    const double lam = std::sqrt(k * std::pow(v, -(g.gamma + 1.0)));
    return family == 1 ? -lam : lam;
}

/// Temperature on the isentrope through the anchor: theta_a (v_a/v)^{gamma-1}.
inline double theta_on_isentrope(const FluidState& anchor, double v, const GasParams& g) {
    return anchor.theta * std::pow(anchor.v / v, g.gamma - 1.0);
}

/// Pressure on the isentrope through the anchor: p_a (v_a/v)^gamma.
inline double pressure_on_isentrope(const FluidState& anchor, double v, const GasParams& g) {
    return pressure(anchor, g) * std::pow(anchor.v / v, g.gamma);
}

}  // namespace lagwave::euler
