#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lagwave/background.hpp"
#include "lagwave/composite_wave.hpp"
#include "lagwave/diagnostics.hpp"
#include "lagwave/scenario.hpp"
#include "lagwave/solver.hpp"

namespace lagwave::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reference scenarios exercised by the verification suite; also usable as
/// config templates through app::to_json.
app::Scenario canonical_contact_scenario();
app::Scenario canonical_composite_scenario();
app::Scenario canonical_maxwell_scenario();

/// Owns the background, solver, state and monitor for one scenario run.
class ScenarioRun {
  public:
    explicit ScenarioRun(const app::Scenario& sc);

    struct Result {
        std::vector<diag::EnergyEntry> entries;
        long steps = 0;
        double wall_seconds = 0.0;
        sim::State first, last;
    };

    /// March to the scenario's t_end, sampling every output_stride.
    Result run(const std::function<void(const sim::State&)>& on_sample = {});

    const Background& background() const { return *background_; }
    /// Non-null for composite and rarefaction kinds.
    const composite::CompositeWave* wave() const { return wave_; }
    sim::Solver& solver() { return *solver_; }
    const sim::State& state() const { return state_; }
    double weight_alpha() const { return alpha_; }

  private:
    app::Scenario sc_;
    std::unique_ptr<Background> background_;
    const composite::CompositeWave* wave_ = nullptr;
    std::unique_ptr<sim::Solver> solver_;
    sim::State state_;
    double alpha_ = 1.0;
    bool gradient_dissipation_ = true;
};

// The verification battery. Each check is self-contained, uses its own
// reference parameters, and reports measured values in the detail string.
CheckResult contact_profile_rates();     // L2 decay exponents of the layer derivatives
CheckResult contact_residual_rates();    // sup-norm decay of the momentum/energy residuals
CheckResult burgers_derivative_norms();  // L-inf rate, L1 identity, strict bounds
CheckResult riemann_round_trip();        // forward-constructed pairs inverted to 1e-8
CheckResult weight_identities();         // heat-kernel identity residuals and g sup
CheckResult solver_order();              // manufactured-solution spatial order
CheckResult maxwell_energy_identity();   // residual shrinks >= 3x under refinement
CheckResult mass_identity();             // conservation defect <= 1e-10 (1+t)
CheckResult contact_asymptotics();       // perturbed contact run returns to the profile
CheckResult composite_asymptotics();     // deviation from the exact-fan comparison falls
CheckResult dielectric_bounds();         // threshold formulas and config enforcement

/// All checks in order; `only` (1-based positions) restricts the set.
/// on_result fires as each check completes.
std::vector<CheckResult> run_all(
    const std::vector<int>& only = {},
    const std::function<void(const CheckResult&)>& on_result = {});

/// Scenario-appropriate subset used by the verify subcommand.
std::vector<CheckResult> verify_scenario(const app::Scenario& sc);

}  // namespace lagwave::checks
