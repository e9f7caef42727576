#include "lagwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lagwave::sim {

State State::zeros(int n) {
    State s;
    s.v.assign(n, 0.0);
    s.u.assign(n, 0.0);
    s.theta.assign(n, 0.0);
    s.E.assign(n, 0.0);
    s.b.assign(n, 0.0);
    return s;
}

void Tendencies::resize(int n) {
    v.assign(n, 0.0);
    u.assign(n, 0.0);
    theta.assign(n, 0.0);
    E.assign(n, 0.0);
    b.assign(n, 0.0);
}

double GaussianBump::operator()(double x) const {
    if (amplitude == 0.0) return 0.0;
    const double r = (x - center) / width;
    return amplitude * std::exp(-r * r);
}

Solver::Solver(Grid1D grid, euler::GasParams gas, const Background* background,
               SolverOptions options)
    : grid_(grid), gas_(gas), background_(background), options_(options) {
    if (!grid_.valid()) throw std::invalid_argument("solver: invalid grid");
    if (!gas_.valid()) throw std::invalid_argument("solver: invalid gas parameters");
    if (background_ == nullptr) throw std::invalid_argument("solver: missing background");
    if (!(options_.cfl_advective > 0.0) || !(options_.cfl_diffusive > 0.0))
        throw std::invalid_argument("solver: CFL numbers must be positive");
}

State Solver::init(const GaussianBump& bump) const {
    State s = State::zeros(grid_.n);
    s.t = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double x = grid_.x(i);
        const BackgroundPoint p = background_->at(x, 0.0);
        const double g = bump(x);
        s.v[i] = p.v + g;
        s.u[i] = p.u + g;
        s.theta[i] = p.theta + g;
        s.E[i] = p.E + g;
        s.b[i] = p.b + g;
        if (!(s.v[i] > 0.0) || !(s.theta[i] > 0.0))
            throw std::invalid_argument("init: perturbed data loses positivity");
    }
    return s;
}

void Solver::rhs(const State& s, double t, Tendencies& out) const {
    const int n = s.n();
    if (n != grid_.n) throw std::invalid_argument("rhs: state size mismatch");
    out.resize(n);

    for (int i = 0; i < n; ++i) {
        if (!(s.v[i] > 0.0) || !(s.theta[i] > 0.0))
            throw PositivityLoss(
                "positivity lost at x = " + std::to_string(grid_.x(i)) +
                    ", t = " + std::to_string(t),
                t);
    }

    const double h = grid_.h();
    const double inv_h = 1.0 / h;
    const double inv_2h = 0.5 / h;
    const double inv_h2 = inv_h * inv_h;
    const double R = gas_.R;
    const double mu = gas_.mu;
    const double kappa = gas_.kappa;
    const double eps = gas_.epsilon;
    const double gm1_over_R = (gas_.gamma - 1.0) / R;
    const bool explicit_damping = options_.relaxation == Relaxation::Explicit;
    const bool upwind = options_.scheme == Scheme::HybridUpwind;

    for (const int i : {0, n - 1}) {
        const BackgroundPoint p = background_->at(grid_.x(i), t);
        out.v[i] = p.v_t;
        out.u[i] = p.u_t;
        out.theta[i] = p.theta_t;
        out.E[i] = p.E_t;
        out.b[i] = p.b_t;
    }

    for (int i = 1; i < n - 1; ++i) {
        const double v = s.v[i];
        const double u = s.u[i];
        const double th = s.theta[i];
        const double E = s.E[i];
        const double b = s.b[i];

        const double u_x = (s.u[i + 1] - s.u[i - 1]) * inv_2h;
        const double p_m = R * s.theta[i - 1] / s.v[i - 1];
        const double p_p = R * s.theta[i + 1] / s.v[i + 1];
        const double p_here = R * th / v;

        const double v_face_p = 0.5 * (v + s.v[i + 1]);
        const double v_face_m = 0.5 * (s.v[i - 1] + v);
        const double visc =
            mu * ((s.u[i + 1] - u) / v_face_p - (u - s.u[i - 1]) / v_face_m) * inv_h2;
        const double heat =
            kappa * ((s.theta[i + 1] - th) / v_face_p - (th - s.theta[i - 1]) / v_face_m) *
            inv_h2;

        const double emf = E + u * b;

        out.v[i] = u_x;
        out.u[i] = -(p_p - p_m) * inv_2h + visc - v * emf * b;
        out.theta[i] =
            gm1_over_R * (-p_here * u_x + heat + mu * u_x * u_x / v + v * emf * emf);

        // Transport at speed u/v: characteristics run against the sign of u/v,
        // so the one-sided difference looks toward the larger index when
        // u/v > 0 and toward the smaller one otherwise.
        const double c = u / v;
        double E_x_transport, b_x_transport;
        if (upwind) {
            if (c > 0.0) {
                E_x_transport = (s.E[i + 1] - E) * inv_h;
                b_x_transport = (s.b[i + 1] - b) * inv_h;
            } else {
                E_x_transport = (E - s.E[i - 1]) * inv_h;
                b_x_transport = (b - s.b[i - 1]) * inv_h;
            }
        } else {
            E_x_transport = (s.E[i + 1] - s.E[i - 1]) * inv_2h;
            b_x_transport = (s.b[i + 1] - s.b[i - 1]) * inv_2h;
        }
        const double E_x_wave = (s.E[i + 1] - s.E[i - 1]) * inv_2h;
        const double b_x_wave = (s.b[i + 1] - s.b[i - 1]) * inv_2h;

        out.E[i] = c * E_x_transport + b_x_wave / (eps * v);
        if (explicit_damping) out.E[i] -= emf / eps;
        out.b[i] = c * b_x_transport + E_x_wave / v;
    }

    if (!options_.evolve_fluid) {
        for (int i = 1; i < n - 1; ++i) {
            const BackgroundPoint p = background_->at(grid_.x(i), t);
            out.v[i] = p.v_t;
            out.u[i] = p.u_t;
            out.theta[i] = p.theta_t;
        }
    }

    if (forcing_) {
        double f[5];
        for (int i = 1; i < n - 1; ++i) {
            forcing_(grid_.x(i), t, f);
            out.v[i] += f[0];
            out.u[i] += f[1];
            out.theta[i] += gm1_over_R * f[2];
            out.E[i] += f[3] / eps;
            out.b[i] += f[4];
        }
    }
}

double Solver::stable_dt(const State& s) const {
    const int n = s.n();
    const double h = grid_.h();
    const double em_factor = 1.0 / std::sqrt(gas_.epsilon);
    double max_speed = 0.0;
    double min_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double v = s.v[i];
        const double p = gas_.R * s.theta[i] / v;
        const double sound = std::sqrt(gas_.gamma * p / v) / v;
        const double transport = std::abs(s.u[i] / v);
        const double em = em_factor / v;
        max_speed = std::max({max_speed, sound, transport, em});
        min_v = std::min(min_v, v);
    }
    double dt = options_.cfl_advective * h / max_speed;
    const double diff = std::max(gas_.mu, gas_.kappa * (gas_.gamma - 1.0) / gas_.R);
    if (diff > 0.0) dt = std::min(dt, options_.cfl_diffusive * h * h * min_v / (2.0 * diff));
    if (options_.relaxation == Relaxation::Explicit) dt = std::min(dt, 0.5 * gas_.epsilon);
    return dt;
}

void Solver::relax(State& s, double tau) {
    const int n = s.n();
    const double eps = gas_.epsilon;
    const double h = grid_.h();
    const double decay = std::exp(-tau / eps);
    const double decay2 = decay * decay;
    for (int i = 0; i < n; ++i) {
        const double ub = s.u[i] * s.b[i];
        const double q = s.E[i] + ub;
        // E(sigma) = -u b + q exp(-sigma/eps) along the relaxation flow, so
        // the damping work integral of v E (E + u b) has a closed form.
        const double work =
            s.v[i] * (-ub * q * eps * (1.0 - decay) + 0.5 * q * q * eps * (1.0 - decay2));
        const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
        relax_damping_.add(w * work);
        s.E[i] = -ub + q * decay;
    }
}

double Solver::take_relax_damping_integral() {
    const double value = relax_damping_.value();
    relax_damping_ = num::KahanSum{};
    return value;
}

void Solver::step(State& s, double dt, const StageHook& hook) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("step: bad dt");
    const int n = s.n();
    if (options_.relaxation == Relaxation::ExactExponential) relax(s, 0.5 * dt);

    const double t0 = s.t;
    auto euler_stage = [n](const std::vector<double>& y, const std::vector<double>& k,
                           double w, std::vector<double>& out) {
        out.resize(n);
        for (int i = 0; i < n; ++i) out[i] = y[i] + w * k[i];
    };
    auto blend_stage = [n](const std::vector<double>& y0, const std::vector<double>& y1,
                           const std::vector<double>& k, double w,
                           std::vector<double>& out) {
        out.resize(n);
        for (int i = 0; i < n; ++i) out[i] = 0.75 * y0[i] + 0.25 * (y1[i] + w * k[i]);
    };
    auto final_stage = [n](std::vector<double>& y, const std::vector<double>& y2,
                           const std::vector<double>& k, double w) {
        for (int i = 0; i < n; ++i) y[i] = (y[i] + 2.0 * (y2[i] + w * k[i])) / 3.0;
    };

    rhs(s, t0, k1_);
    if (hook) hook(s, t0, k1_, dt / 6.0);
    euler_stage(s.v, k1_.v, dt, s1_.v);
    euler_stage(s.u, k1_.u, dt, s1_.u);
    euler_stage(s.theta, k1_.theta, dt, s1_.theta);
    euler_stage(s.E, k1_.E, dt, s1_.E);
    euler_stage(s.b, k1_.b, dt, s1_.b);
    s1_.t = t0 + dt;

    rhs(s1_, t0 + dt, k2_);
    if (hook) hook(s1_, t0 + dt, k2_, dt / 6.0);
    blend_stage(s.v, s1_.v, k2_.v, dt, s2_.v);
    blend_stage(s.u, s1_.u, k2_.u, dt, s2_.u);
    blend_stage(s.theta, s1_.theta, k2_.theta, dt, s2_.theta);
    blend_stage(s.E, s1_.E, k2_.E, dt, s2_.E);
    blend_stage(s.b, s1_.b, k2_.b, dt, s2_.b);
    s2_.t = t0 + 0.5 * dt;

    rhs(s2_, t0 + 0.5 * dt, k3_);
    if (hook) hook(s2_, t0 + 0.5 * dt, k3_, 2.0 * dt / 3.0);
    final_stage(s.v, s2_.v, k3_.v, dt);
    final_stage(s.u, s2_.u, k3_.u, dt);
    final_stage(s.theta, s2_.theta, k3_.theta, dt);
    final_stage(s.E, s2_.E, k3_.E, dt);
    final_stage(s.b, s2_.b, k3_.b, dt);
    s.t = t0 + dt;

    if (options_.relaxation == Relaxation::ExactExponential) relax(s, 0.5 * dt);
}

RunResult run(Solver& solver, State& s, double t_end, double sample_stride,
              const std::function<void(const State&)>& on_sample,
              const Solver::StageHook& hook) {
    if (!(t_end >= s.t)) throw std::invalid_argument("run: t_end precedes current time");
    RunResult result;
    if (on_sample) on_sample(s);
    const double tiny = 1e-12 * std::max(1.0, std::abs(t_end));
    double next = (sample_stride > 0.0) ? s.t + sample_stride : t_end;
    while (s.t < t_end - tiny) {
        const double target = std::min(next, t_end);
        while (s.t < target - tiny) {
            double dt = solver.stable_dt(s);
            if (!(dt > 0.0) || !std::isfinite(dt))
                throw std::runtime_error("run: stable step is not positive");
            if (s.t + dt > target) dt = target - s.t;
            solver.step(s, dt, hook);
            ++result.steps;
        }
        s.t = target;
        if (on_sample) on_sample(s);
        if (sample_stride > 0.0) next += sample_stride;
    }
    result.t_final = s.t;
    return result;
}

}  // namespace lagwave::sim
