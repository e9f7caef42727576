#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagwave/background.hpp"
#include "lagwave/gas.hpp"
#include "lagwave/numerics.hpp"

namespace lagwave::sim {

struct Grid1D {
    double x_min = -200.0;
    double x_max = 200.0;
    int n = 4096;

    double h() const { return (x_max - x_min) / (n - 1); }
    double x(int i) const { return x_min + i * h(); }
    bool valid() const { return n >= 16 && x_max > x_min; }
};

/// Nodal fields (v, u, theta, E, b) at time t on a Grid1D.
struct State {
    double t = 0.0;
    std::vector<double> v, u, theta, E, b;

    int n() const { return static_cast<int>(v.size()); }
    static State zeros(int n);
};

struct Tendencies {
    std::vector<double> v, u, theta, E, b;
    void resize(int n);
};

/// Spatial discretisation of the electromagnetic transport terms (u/v) f_x.
/// HybridUpwind differences toward the domain of dependence node by node,
/// Central keeps every first derivative centred (second order).
enum class Scheme { HybridUpwind, Central };

/// Treatment of the stiff damping -(E + u b)/epsilon in the E equation:
/// symmetric split with the pointwise exact exponential, or kept inside the
/// explicit right-hand side (then dt is additionally capped by epsilon/2).
enum class Relaxation { ExactExponential, Explicit };

struct SolverOptions {
    Scheme scheme = Scheme::HybridUpwind;
    Relaxation relaxation = Relaxation::ExactExponential;
    double cfl_advective = 0.4;
    double cfl_diffusive = 0.4;
    bool evolve_fluid = true;  // false pins (v,u,theta) to the background
};

struct PositivityLoss : std::runtime_error {
    PositivityLoss(const std::string& what, double time) : std::runtime_error(what), t(time) {}
    double t;
};

struct GaussianBump {
    double amplitude = 0.0;
    double width = 2.0;
    double center = 0.0;

    double operator()(double x) const;
};

/// Method-of-lines discretisation of the Lagrangian fluid-Maxwell system
///   v_t = u_x
///   u_t = -p_x + mu (u_x/v)_x - v (E + u b) b
///   theta_t = (gamma-1)/R [ -p u_x + kappa (theta_x/v)_x + mu u_x^2/v + v (E + u b)^2 ]
///   E_t = (u/v) E_x + b_x/(epsilon v) - (E + u b)/epsilon
///   b_t = (u/v) b_x + E_x/v
/// on a uniform grid. Diffusion is in conservative flux form with arithmetic
/// interface means of v; p_x and the wave part of the Maxwell block are
/// centred. Boundary nodes follow the background's exact time derivatives.
class Solver {
  public:
    Solver(Grid1D grid, euler::GasParams gas, const Background* background,
           SolverOptions options = {});

    /// Background at t = 0 plus one Gaussian bump on each of the five fields.
    /// Throws std::invalid_argument if the perturbed data loses positivity.
    State init(const GaussianBump& bump = {}) const;

    /// Extra source terms f(x, t, out[5]) in equation order (v, u, theta, E, b),
    /// added as written in the governing equations (the theta entry is divided
    /// by R/(gamma-1) and the E entry by epsilon before entering the tendency).
    using Forcing = std::function<void(double, double, double*)>;
    void set_forcing(Forcing f) { forcing_ = std::move(f); }

    void rhs(const State& s, double t, Tendencies& out) const;

    /// Largest stable step from the advective, electromagnetic, diffusive and
    /// (explicit relaxation only) damping restrictions.
    double stable_dt(const State& s) const;

    /// Stage callback: stage state, stage time, stage tendencies, and the
    /// quadrature weight dt * b_k of the stage in the completed step, so that
    /// accumulated stage sums telescope exactly against the state update.
    using StageHook = std::function<void(const State&, double, const Tendencies&, double)>;

    /// One SSP-RK3 step of size dt, bracketed by exact relaxation half-steps
    /// when relaxation is ExactExponential.
    void step(State& s, double dt, const StageHook& hook = {});

    /// Damping work sum_i w_i v_i E_i (E_i + u_i b_i) integrated exactly over
    /// all relaxation half-steps since the previous call (trapezoid weights).
    double take_relax_damping_integral();

    const Grid1D& grid() const { return grid_; }
    const euler::GasParams& gas() const { return gas_; }
    const Background& background() const { return *background_; }
    const SolverOptions& options() const { return options_; }

  private:
    void relax(State& s, double tau);

    Grid1D grid_;
    euler::GasParams gas_;
    const Background* background_;
    SolverOptions options_;
    Forcing forcing_;
    num::KahanSum relax_damping_;

    mutable Tendencies k1_, k2_, k3_;
    mutable State s1_, s2_;
};

struct RunResult {
    long steps = 0;
    double t_final = 0.0;
};

/// March s to t_end. on_sample fires at t = 0, after each sample_stride of
/// simulated time, and at t_end; hook is forwarded to every step. A
/// non-positive sample_stride samples only the endpoints.
RunResult run(Solver& solver, State& s, double t_end, double sample_stride,
              const std::function<void(const State&)>& on_sample = {},
              const Solver::StageHook& hook = {});

}  // namespace lagwave::sim
