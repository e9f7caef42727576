#pragma once

#include <stdexcept>
#include <vector>

#include "lagwave/gas.hpp"

namespace lagwave::contact {

/// Data of a viscous contact layer: end temperatures, the common pressure,
/// and the reference velocity carried by both far fields.
struct ContactWaveSpec {
    double theta_minus = 1.0;
    double theta_plus = 1.0;
    double p_plus = 1.0;
    double u_minus = 0.0;

    double delta() const;  // |theta_plus - theta_minus|
    bool valid() const { return theta_minus > 0 && theta_plus > 0 && p_plus > 0; }
};

/// a = kappa p_+ (gamma-1) / (gamma R^2), the coefficient of the nonlinear
/// diffusion equation theta_t = a (theta_x/theta)_x obeyed by the layer
/// temperature.
double diffusion_coefficient(const euler::GasParams& g, double p_plus);

struct ShootingDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Self-similar temperature Theta(xi), xi = x/sqrt(1+t), solving
///   -(xi/2) Theta' = a (Theta'/Theta)',  Theta(-inf)=theta_-, Theta(+inf)=theta_+,
/// stored on a uniform xi grid with its first derivative and evaluated by
/// cubic Hermite interpolation. Second and higher xi-derivatives follow from
/// the ODE identity (ln Theta)'' = -xi Theta' / (2a) and are never formed by
/// numerical differentiation.
class SelfSimilarProfile {
  public:
    double xi_max = 12.0;
    double a = 0.0;
    double theta_minus = 1.0, theta_plus = 1.0;
    double boundary_mismatch = 0.0;  // max |Theta(+-Xi) - theta_+-| achieved
    std::vector<double> xi, theta, dtheta;

    bool constant() const { return xi.empty(); }

    /// Theta and Theta' at xi (clamped to the end states outside the table).
    void eval(double xi_val, double& th, double& dth) const;
};

struct SolveOptions {
    double tol = 1e-10;      // boundary mismatch target at +-xi_max
    double xi_max = 12.0;    // truncation of the similarity line
    int grid_points = 4096;  // dense table resolution
    int max_iter = 60;       // shooting iteration cap
};

/// Two-sided shooting from xi = 0 with a secant (Broyden) iteration on
/// (Theta(0), Theta'(0)). Wave strength below 1e-14 short-circuits to the
/// constant profile.
SelfSimilarProfile solve_selfsimilar(const ContactWaveSpec& spec, const euler::GasParams& g,
                                     const SolveOptions& opt = {});

/// Pointwise contact-wave profile and the derivatives consumed by the
/// solver and the diagnostics. The pressure R thetabar / vbar equals p_plus
/// identically and vbar_t - ubar_x vanishes identically by construction.
struct ContactPoint {
    double v, u, theta;
    double v_x, u_x, theta_x;
    double theta_xx;
    double v_t, u_t, theta_t;
};

ContactPoint contact_profile(double x, double t, const SelfSimilarProfile& prof,
                             const ContactWaveSpec& spec, const euler::GasParams& g);

/// Residuals of the profile under the viscous momentum and total-energy
/// operators (no electromagnetic fields): R1 for momentum, R2 for energy.
/// Both are evaluated in closed form from the similarity table.
struct ContactResiduals {
    double r1;
    double r2;
};

ContactResiduals contact_residuals(double x, double t, const SelfSimilarProfile& prof,
                                   const ContactWaveSpec& spec, const euler::GasParams& g);

/// Sup over x of |R1| and |R2| at time t (exactly self-similar, so the sup
/// is taken over the xi table).
ContactResiduals residual_sup_norms(double t, const SelfSimilarProfile& prof,
                                    const ContactWaveSpec& spec, const euler::GasParams& g);

enum class ProfileField { Theta, V, U, USpaceFromTime };

/// L2(dx) norm of the k-th x-derivative of the chosen profile field at time
/// t; for USpaceFromTime the k-th t-derivative of ubar is measured instead.
double profile_deriv_l2norm(const SelfSimilarProfile& prof, const ContactWaveSpec& spec,
                            const euler::GasParams& g, ProfileField field, int k, double t);

/// Log-log least-squares decay exponent of the L2 norm series over t_list.
/// Throws for the zero-strength profile (degenerate series).
double profile_l2_rate(const SelfSimilarProfile& prof, const ContactWaveSpec& spec,
                       const euler::GasParams& g, ProfileField field, int k,
                       const std::vector<double>& t_list);

/// Fit of the Gaussian envelope |Theta'(xi)| <= c1 * delta * exp(-c_hat xi^2):
/// least squares of ln|Theta'| against xi^2 over the resolved part of the
/// table. c_hat feeds the diagnostics weight parameter alpha = c_hat/4.
struct EnvelopeFit {
    double c_hat;
    double c1;
};

EnvelopeFit fit_gaussian_envelope(const SelfSimilarProfile& prof, double delta);

}  // namespace lagwave::contact
