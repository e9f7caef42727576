#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "lagwave/background.hpp"
#include "lagwave/contact_wave.hpp"
#include "lagwave/gas.hpp"
#include "lagwave/numerics.hpp"
#include "lagwave/solver.hpp"

namespace lagwave::diag {

/// Phi(s) = s - 1 - ln s: convex, nonnegative, vanishing only at s = 1.
/// Throws std::domain_error for s <= 0.
double phi_entropy(double s);

/// Heat-kernel weight pair
///   omega(x,t) = (1+t)^{-1/2} exp(-alpha x^2/(1+t)),
///   g(x,t)     = integral of omega in x from -infinity,
/// with the closed-form derivatives satisfying omega_t = omega_xx/(4 alpha)
/// and 4 alpha g_t = omega_x.
struct HeatKernelWeight {
    double alpha = 1.0;

    double omega(double x, double t) const;
    double omega_x(double x, double t) const;
    double omega_xx(double x, double t) const;
    double omega_t(double x, double t) const;
    double g(double x, double t) const;
    double g_t(double x, double t) const;

    double g_sup() const;           // sqrt(pi) * alpha^{-1/2}, time independent
    double omega_integral() const;  // integral of omega over the line, any t
};

struct WeightResiduals {
    double heat = 0.0;  // max |omega_t - omega_xx/(4 alpha)|
    double flux = 0.0;  // max |4 alpha g_t - omega_x|
};

/// Max residuals of the two weight identities over the tensor grid xs x ts,
/// every derivative taken from its own closed form.
WeightResiduals weight_identities_residual(const HeatKernelWeight& w,
                                           const std::vector<double>& xs,
                                           const std::vector<double>& ts);

/// Weight parameter alpha = c_hat/4 from the Gaussian envelope of a contact
/// profile's temperature derivative; 1.0 for a constant profile.
double weight_alpha_from_profile(const contact::SelfSimilarProfile& prof);

/// The compound damped quantity E + psi b + Ubar b, stored split and total.
/// The total equals E + u b pointwise by construction.
struct DissipativeCombination {
    std::vector<double> e_part;    // E
    std::vector<double> psi_b;     // (u - Ubar) b
    std::vector<double> ubar_b;    // Ubar b
    std::vector<double> total;     // sum of the three
    double l2 = 0.0;               // trapezoid L2 norm of the total
};

DissipativeCombination dissipative_combination(const sim::State& s,
                                               const std::vector<double>& u_bar,
                                               double h);

/// One time sample of every tracked energy quantity. Perturbations are taken
/// against the background profile: phi = v - V, psi = u - U, zeta = theta -
/// Theta, and E, b against zero-field. Cumulative entries are filled by the
/// RunMonitor that owns the stage accumulators.
struct EnergyEntry {
    double t = 0.0;

    double l2_phi = 0.0, l2_psi = 0.0, l2_zeta = 0.0, l2_E = 0.0, l2_b = 0.0;
    double h1_phi = 0.0, h1_psi = 0.0, h1_zeta = 0.0, h1_E = 0.0, h1_b = 0.0;

    double entropy_energy = 0.0;  // int (psi^2/2 + R Theta Phi(v/V) + R/(gamma-1) Theta Phi(theta/Theta))
    double maxwell_energy = 0.0;  // int (eps v E^2 + v b^2)/2
    double weighted = 0.0;        // int (phi^2 + zeta^2 + b^2) omega^2

    double diss_grad = 0.0;   // cumulative int_0^t ||(psi_x, zeta_x)||^2
    double diss_combo = 0.0;  // cumulative int_0^t ||E + psi b + Ubar b||^2

    double sup_phi = 0.0, sup_psi = 0.0, sup_zeta = 0.0, sup_E = 0.0, sup_b = 0.0;

    double mass_residual = 0.0;     // conservation defect of int phi dx
    double maxwell_residual = 0.0;  // defect of the Maxwell energy identity

    double max_sup() const;
};

/// Instantaneous entries of the ledger (everything except the cumulative and
/// residual fields) by the trapezoid rule on the grid. The E norm carries the
/// sqrt(epsilon) scaling. H1 norms pair the L2 norm with centred differences
/// of the perturbation (one-sided at the ends).
EnergyEntry energy_report(const sim::State& s, const Background& profile,
                          const HeatKernelWeight& w, const sim::Grid1D& grid,
                          const euler::GasParams& gas);

/// Sup norms of (v - V, u - U, theta - Theta, E, b) over the grid against an
/// arbitrary profile evaluator (background or exact-fan comparison).
struct FieldSups {
    double v = 0.0, u = 0.0, theta = 0.0, E = 0.0, b = 0.0;
    double max_field() const;
};

using ProfileFn = std::function<BackgroundPoint(double, double)>;

FieldSups sup_norm_deviation(const sim::State& s, const sim::Grid1D& grid,
                             const ProfileFn& profile);

/// Dielectric thresholds under which the theory applies. A zero reference
/// velocity (contact) or zero beta (composite) means any positive constant
/// works; infinity is returned.
double dielectric_bound_contact(double v_minus, double v_plus, double u_minus);
double dielectric_bound_composite(double v_minus, double v_plus, double theta_minus,
                                  double theta_plus, double u_minus, double u_plus,
                                  const euler::GasParams& g);

struct DegenerateSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecayFit {
    double exponent = 0.0;  // slope of log(value) against log(1+t)
    double ci = 0.0;        // 1.96 x standard error of the slope
};

/// Least-squares decay exponent of a positive series against (1+t). Requires
/// at least 8 samples with (1+t) spanning two decades; DegenerateSeries for
/// nonpositive values, std::invalid_argument for inadequate sampling.
DecayFit decay_fit(const std::vector<double>& t, const std::vector<double>& value);

/// Streams a simulation: accumulates the stage-exact conservation sums and
/// dissipation integrals through the solver's stage hook and materialises an
/// EnergyEntry per sample time.
class RunMonitor {
  public:
    struct Options {
        HeatKernelWeight weight{};
        // Gradient dissipation needs the background at every node each stage;
        // switch it off for runs that only track deviations.
        bool gradient_dissipation = true;
    };

    explicit RunMonitor(sim::Solver& solver);
    RunMonitor(sim::Solver& solver, Options opt);

    sim::Solver::StageHook stage_hook();
    void sample(const sim::State& s);

    const std::vector<EnergyEntry>& entries() const { return entries_; }

  private:
    void stage(const sim::State& s, double t, const sim::Tendencies& k, double w);

    sim::Solver& solver_;
    Options opt_;
    bool primed_ = false;
    double mass0_ = 0.0;
    double maxwell0_ = 0.0;
    num::KahanSum mass_flux_;        // sum of w Q(v_dot)
    num::KahanSum damping_;         // sum of w Q(v E (E+ub)) + exact relax work
    num::KahanSum boundary_flux_;   // sum of w [E b + u(eps E^2 + b^2)/2] across ends
    num::KahanSum diss_grad_;
    num::KahanSum diss_combo_;
    std::vector<double> scratch_;
    std::vector<EnergyEntry> entries_;
};

}  // namespace lagwave::diag
