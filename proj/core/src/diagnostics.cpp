#include "lagwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lagwave::diag {

double phi_entropy(double s) {
    if (!(s > 0.0)) throw std::domain_error("phi_entropy: argument must be positive");
    return (s - 1.0) - std::log1p(s - 1.0);
}

double HeatKernelWeight::omega(double x, double t) const {
    const double s = 1.0 + t;
    return std::exp(-alpha * x * x / s) / std::sqrt(s);
}

double HeatKernelWeight::omega_x(double x, double t) const {
    const double s = 1.0 + t;
    return -2.0 * alpha * x / s * omega(x, t);
}

double HeatKernelWeight::omega_xx(double x, double t) const {
    const double s = 1.0 + t;
    return (4.0 * alpha * alpha * x * x / (s * s) - 2.0 * alpha / s) * omega(x, t);
}

double HeatKernelWeight::omega_t(double x, double t) const {
    const double s = 1.0 + t;
    return (alpha * x * x / (s * s) - 0.5 / s) * omega(x, t);
}

double HeatKernelWeight::g(double x, double t) const {
    const double s = 1.0 + t;
    return 0.5 * std::sqrt(std::numbers::pi / alpha) *
           (1.0 + std::erf(x * std::sqrt(alpha / s)));
}

double HeatKernelWeight::g_t(double x, double t) const {
    const double s = 1.0 + t;
    return -0.5 * x * std::pow(s, -1.5) * std::exp(-alpha * x * x / s);
}

double HeatKernelWeight::g_sup() const { return std::sqrt(std::numbers::pi) / std::sqrt(alpha); }

double HeatKernelWeight::omega_integral() const { return std::sqrt(std::numbers::pi / alpha); }

WeightResiduals weight_identities_residual(const HeatKernelWeight& w,
                                           const std::vector<double>& xs,
                                           const std::vector<double>& ts) {
    WeightResiduals r;
    for (const double t : ts) {
        for (const double x : xs) {
            const double heat = w.omega_t(x, t) - w.omega_xx(x, t) / (4.0 * w.alpha);
            const double flux = 4.0 * w.alpha * w.g_t(x, t) - w.omega_x(x, t);
            r.heat = std::max(r.heat, std::abs(heat));
            r.flux = std::max(r.flux, std::abs(flux));
        }
    }
    return r;
}

double weight_alpha_from_profile(const contact::SelfSimilarProfile& prof) {
    if (prof.constant()) return 1.0;
    const double delta = std::abs(prof.theta_plus - prof.theta_minus);
    return contact::fit_gaussian_envelope(prof, delta).c_hat / 4.0;
}

DissipativeCombination dissipative_combination(const sim::State& s,
                                               const std::vector<double>& u_bar,
                                               double h) {
    const int n = s.n();
    if (static_cast<int>(u_bar.size()) != n)
        throw std::invalid_argument("dissipative_combination: grid mismatch");
    DissipativeCombination d;
    d.e_part.resize(n);
    d.psi_b.resize(n);
    d.ubar_b.resize(n);
    d.total.resize(n);
    std::vector<double> sq(n);
    for (int i = 0; i < n; ++i) {
        d.e_part[i] = s.E[i];
        d.psi_b[i] = (s.u[i] - u_bar[i]) * s.b[i];
        d.ubar_b[i] = u_bar[i] * s.b[i];
        d.total[i] = d.e_part[i] + d.psi_b[i] + d.ubar_b[i];
        sq[i] = d.total[i] * d.total[i];
    }
    d.l2 = std::sqrt(num::trapezoid(sq, h));
    return d;
}

namespace {

void centred_derivative(const std::vector<double>& f, double h, std::vector<double>& out) {
    const int n = static_cast<int>(f.size());
    out.resize(n);
    if (n < 3) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
}

double l2_of(const std::vector<double>& f, double h) {
    std::vector<double> sq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
    return std::sqrt(num::trapezoid(sq, h));
}

}  // namespace

double EnergyEntry::max_sup() const {
    return std::max({sup_phi, sup_psi, sup_zeta, sup_E, sup_b});
}

EnergyEntry energy_report(const sim::State& s, const Background& profile,
                          const HeatKernelWeight& w, const sim::Grid1D& grid,
                          const euler::GasParams& gas) {
    const int n = s.n();
    const double h = grid.h();
    EnergyEntry e;
    e.t = s.t;

    std::vector<double> phi(n), psi(n), zeta(n), Ef(n), bf(n);
    std::vector<double> entropy(n), maxwell(n), weighted(n);
    const double sqrt_eps = std::sqrt(gas.epsilon);

    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        const BackgroundPoint p = profile.at(x, s.t);
        if (!(p.v > 0.0) || !(p.theta > 0.0))
            throw std::domain_error("energy_report: nonpositive profile state");
        phi[i] = s.v[i] - p.v;
        psi[i] = s.u[i] - p.u;
        zeta[i] = s.theta[i] - p.theta;
        Ef[i] = sqrt_eps * s.E[i];
        bf[i] = s.b[i];

        entropy[i] = 0.5 * psi[i] * psi[i] +
                     gas.R * p.theta * phi_entropy(s.v[i] / p.v) +
                     gas.R / (gas.gamma - 1.0) * p.theta * phi_entropy(s.theta[i] / p.theta);
        maxwell[i] = 0.5 * s.v[i] * (gas.epsilon * s.E[i] * s.E[i] + s.b[i] * s.b[i]);
        const double om = w.omega(x, s.t);
        weighted[i] = (phi[i] * phi[i] + zeta[i] * zeta[i] + s.b[i] * s.b[i]) * om * om;

        e.sup_phi = std::max(e.sup_phi, std::abs(phi[i]));
        e.sup_psi = std::max(e.sup_psi, std::abs(psi[i]));
        e.sup_zeta = std::max(e.sup_zeta, std::abs(zeta[i]));
        e.sup_E = std::max(e.sup_E, std::abs(s.E[i]));
        e.sup_b = std::max(e.sup_b, std::abs(s.b[i]));
    }

    e.l2_phi = l2_of(phi, h);
    e.l2_psi = l2_of(psi, h);
    e.l2_zeta = l2_of(zeta, h);
    e.l2_E = l2_of(Ef, h);
    e.l2_b = l2_of(bf, h);

    std::vector<double> d;
    auto h1 = [&](const std::vector<double>& f, double l2) {
        centred_derivative(f, h, d);
        const double seminorm = l2_of(d, h);
        return std::sqrt(l2 * l2 + seminorm * seminorm);
    };
    e.h1_phi = h1(phi, e.l2_phi);
    e.h1_psi = h1(psi, e.l2_psi);
    e.h1_zeta = h1(zeta, e.l2_zeta);
    e.h1_E = h1(Ef, e.l2_E);
    e.h1_b = h1(bf, e.l2_b);

    e.entropy_energy = num::trapezoid(entropy, h);
    e.maxwell_energy = num::trapezoid(maxwell, h);
    e.weighted = num::trapezoid(weighted, h);
    return e;
}

double FieldSups::max_field() const { return std::max({v, u, theta, E, b}); }

FieldSups sup_norm_deviation(const sim::State& s, const sim::Grid1D& grid,
                             const ProfileFn& profile) {
    FieldSups f;
    for (int i = 0; i < s.n(); ++i) {
        const BackgroundPoint p = profile(grid.x(i), s.t);
        f.v = std::max(f.v, std::abs(s.v[i] - p.v));
        f.u = std::max(f.u, std::abs(s.u[i] - p.u));
        f.theta = std::max(f.theta, std::abs(s.theta[i] - p.theta));
        f.E = std::max(f.E, std::abs(s.E[i] - p.E));
        f.b = std::max(f.b, std::abs(s.b[i] - p.b));
    }
    return f;
}

double dielectric_bound_contact(double v_minus, double v_plus, double u_minus) {
    if (!(v_minus > 0.0) || !(v_plus > 0.0))
        throw std::invalid_argument("dielectric_bound_contact: volumes must be positive");
    if (u_minus == 0.0) return std::numeric_limits<double>::infinity();
    return std::min(v_minus, v_plus) /
           (64.0 * std::max(v_minus, v_plus) * u_minus * u_minus);
}

double dielectric_bound_composite(double v_minus, double v_plus, double theta_minus,
                                  double theta_plus, double u_minus, double u_plus,
                                  const euler::GasParams& g) {
    if (!(v_minus > 0.0) || !(v_plus > 0.0) || !(theta_minus > 0.0) || !(theta_plus > 0.0))
        throw std::invalid_argument("dielectric_bound_composite: states must be positive");
    const double beta = std::max(std::abs(u_minus), std::abs(u_plus));
    if (beta == 0.0) return std::numeric_limits<double>::infinity();
    const double vmin = std::min(v_minus, v_plus);
    const double vmax = std::max(v_minus, v_plus);
    const double first = vmin / (80.0 * vmax * beta * beta);
    const double speed = std::sqrt(g.gamma * g.R) *
                         std::max(std::sqrt(theta_plus) / v_plus, std::sqrt(theta_minus) / v_minus);
    const double second = 1.0 / (32.0 * vmax * beta * speed);
    return std::min(first, second);
}

DecayFit decay_fit(const std::vector<double>& t, const std::vector<double>& value) {
    if (t.size() != value.size()) throw std::invalid_argument("decay_fit: size mismatch");
    if (t.size() < 8) throw std::invalid_argument("decay_fit: need at least 8 samples");
    double smin = std::numeric_limits<double>::infinity();
    double smax = 0.0;
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = 0.0;
    std::vector<double> lx(t.size()), ly(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double s = 1.0 + t[i];
        if (!(s > 0.0) || !std::isfinite(s))
            throw DegenerateSeries("decay_fit: time out of range");
        if (!(value[i] > 0.0) || !std::isfinite(value[i]))
            throw DegenerateSeries("decay_fit: nonpositive value in series");
        smin = std::min(smin, s);
        smax = std::max(smax, s);
        if (t[i] > 0.0) {
            tmin = std::min(tmin, t[i]);
            tmax = std::max(tmax, t[i]);
        }
        lx[i] = std::log(s);
        ly[i] = std::log(value[i]);
    }
    // Two decades of either t or 1+t: a [10, 1000] sweep qualifies.
    double span = smax / smin;
    if (tmax > 0.0 && tmin < std::numeric_limits<double>::infinity())
        span = std::max(span, tmax / tmin);
    if (span < 100.0 * (1.0 - 1e-9))
        throw std::invalid_argument("decay_fit: series must span two decades in time");
    const num::LineFit fit = num::fit_line(lx, ly);
    return DecayFit{fit.slope, 1.96 * fit.slope_se};
}

RunMonitor::RunMonitor(sim::Solver& solver) : RunMonitor(solver, Options{}) {}

RunMonitor::RunMonitor(sim::Solver& solver, Options opt)
    : solver_(solver), opt_(opt) {}

sim::Solver::StageHook RunMonitor::stage_hook() {
    return [this](const sim::State& s, double t, const sim::Tendencies& k, double w) {
        stage(s, t, k, w);
    };
}

void RunMonitor::stage(const sim::State& s, double t, const sim::Tendencies& k, double w) {
    const int n = s.n();
    const double h = solver_.grid().h();
    const double eps = solver_.gas().epsilon;

    mass_flux_.add(w * num::trapezoid(k.v, h));

    scratch_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double emf = s.E[i] + s.u[i] * s.b[i];
        scratch_[i] = emf * emf;
    }
    diss_combo_.add(w * num::trapezoid(scratch_, h));

    if (solver_.options().relaxation == sim::Relaxation::Explicit) {
        for (int i = 0; i < n; ++i) {
            const double emf = s.E[i] + s.u[i] * s.b[i];
            scratch_[i] = s.v[i] * s.E[i] * emf;
        }
        damping_.add(w * num::trapezoid(scratch_, h));
    }

    auto end_flux = [&](int i) {
        return s.E[i] * s.b[i] +
               0.5 * s.u[i] * (eps * s.E[i] * s.E[i] + s.b[i] * s.b[i]);
    };
    boundary_flux_.add(w * (end_flux(n - 1) - end_flux(0)));

    if (opt_.gradient_dissipation) {
        std::vector<double> psi(n), zeta(n), dpsi, dzeta;
        const Background& bg = solver_.background();
        for (int i = 0; i < n; ++i) {
            const BackgroundPoint p = bg.at(solver_.grid().x(i), t);
            psi[i] = s.u[i] - p.u;
            zeta[i] = s.theta[i] - p.theta;
        }
        centred_derivative(psi, h, dpsi);
        centred_derivative(zeta, h, dzeta);
        for (int i = 0; i < n; ++i) scratch_[i] = dpsi[i] * dpsi[i] + dzeta[i] * dzeta[i];
        diss_grad_.add(w * num::trapezoid(scratch_, h));
    }
}

void RunMonitor::sample(const sim::State& s) {
    damping_.add(solver_.take_relax_damping_integral());

    EnergyEntry e = energy_report(s, solver_.background(), opt_.weight, solver_.grid(),
                                  solver_.gas());
    const double mass = num::trapezoid(s.v, solver_.grid().h());
    if (!primed_) {
        mass0_ = mass;
        maxwell0_ = e.maxwell_energy;
        primed_ = true;
    }
    e.diss_grad = diss_grad_.value();
    e.diss_combo = diss_combo_.value();
    e.mass_residual = std::abs(mass - mass0_ - mass_flux_.value());
    e.maxwell_residual =
        std::abs(e.maxwell_energy - maxwell0_ + damping_.value() - boundary_flux_.value());
    entries_.push_back(e);
}

}  // namespace lagwave::diag
