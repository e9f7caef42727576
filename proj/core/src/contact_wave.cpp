#include "lagwave/contact_wave.hpp"

#include <algorithm>
#include <cmath>

#include "lagwave/numerics.hpp"

namespace lagwave::contact {

double ContactWaveSpec::delta() const { return std::abs(theta_plus - theta_minus); }

double diffusion_coefficient(const euler::GasParams& g, double p_plus) {
    if (!g.valid() || p_plus <= 0) {
        throw std::invalid_argument("diffusion_coefficient: invalid inputs");
    }
    return g.kappa * p_plus * (g.gamma - 1.0) / (g.gamma * g.R * g.R);
}

void SelfSimilarProfile::eval(double xi_val, double& th, double& dth) const {
    if (constant()) {
        th = theta_plus;
        dth = 0.0;
        return;
    }
    if (xi_val <= xi.front()) {
        th = theta_minus;
        dth = 0.0;
        return;
    }
    if (xi_val >= xi.back()) {
        th = theta_plus;
        dth = 0.0;
        return;
    }
    const double h = xi[1] - xi[0];
    const auto n = xi.size();
    std::size_t i = static_cast<std::size_t>((xi_val - xi.front()) / h);
    if (i >= n - 1) i = n - 2;
    const double s = (xi_val - xi[i]) / h;
    const double y0 = theta[i], y1 = theta[i + 1];
    const double m0 = dtheta[i] * h, m1 = dtheta[i + 1] * h;
    // Cubic Hermite basis.
    const double s2 = s * s, s3 = s2 * s;
    th = (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * m1;
    dth = ((6 * s2 - 6 * s) * y0 + (3 * s2 - 4 * s + 1) * m0 + (-6 * s2 + 6 * s) * y1 +
           (3 * s2 - 2 * s) * m1) /
          h;
}

namespace {

// First-order form of -(xi/2) Theta' = a (Theta'/Theta)':
//   Theta'' = Theta'^2/Theta - xi Theta Theta' / (2a).
struct OdeRhs {
    double a;
    void operator()(double xi, const double* y, double* dy) const {
        dy[0] = y[1];
        dy[1] = y[1] * y[1] / y[0] - xi * y[0] * y[1] / (2.0 * a);
    }
};

struct ShotResult {
    double left;   // Theta(-Xi) - theta_-
    double right;  // Theta(+Xi) - theta_+
};

ShotResult shoot(const ContactWaveSpec& spec, double a, double xi_max, double th0,
                 double dth0) {
    OdeRhs f{a};
    num::Ode2 ode;
    ode.rhs = [&f](double t, const double* y, double* dy) { f(t, y, dy); };
    double yr[2] = {th0, dth0};
    ode.integrate(0.0, xi_max, yr);
    double yl[2] = {th0, dth0};
    ode.integrate(0.0, -xi_max, yl);
    return {yl[0] - spec.theta_minus, yr[0] - spec.theta_plus};
}

}  // namespace

SelfSimilarProfile solve_selfsimilar(const ContactWaveSpec& spec, const euler::GasParams& g,
                                     const SolveOptions& opt) {
    if (!spec.valid()) throw std::invalid_argument("solve_selfsimilar: invalid spec");
    SelfSimilarProfile prof;
    prof.xi_max = opt.xi_max;
    prof.a = diffusion_coefficient(g, spec.p_plus);
    prof.theta_minus = spec.theta_minus;
    prof.theta_plus = spec.theta_plus;

    if (spec.delta() < 1e-14) {
        prof.theta_minus = prof.theta_plus = spec.theta_plus;
        return prof;  // constant profile, empty table
    }

    // Initial guess from the linearized (erf) solution.
    const double mid = 0.5 * (spec.theta_minus + spec.theta_plus);
    const double diff = prof.a / mid;
    double th0 = mid;
    double dth0 = (spec.theta_plus - spec.theta_minus) / (2.0 * std::sqrt(M_PI * diff));

    // Broyden iteration on (Theta(0), Theta'(0)) with a finite-difference
    // Jacobian refreshed when progress stalls.
    const double scale = std::max({1.0, spec.theta_minus, spec.theta_plus});
    const double target = opt.tol * scale;
    double j[2][2];
    bool have_j = false;
    ShotResult r = shoot(spec, prof.a, prof.xi_max, th0, dth0);
    int it = 0;
    for (; it < opt.max_iter; ++it) {
        const double rn = std::max(std::abs(r.left), std::abs(r.right));
        if (rn <= target) break;
        if (!have_j) {
            const double e1 = 1e-7 * scale;
            const double e2 = 1e-7 * std::max(std::abs(dth0), 1e-3);
            const ShotResult r1 = shoot(spec, prof.a, prof.xi_max, th0 + e1, dth0);
            const ShotResult r2 = shoot(spec, prof.a, prof.xi_max, th0, dth0 + e2);
            j[0][0] = (r1.left - r.left) / e1;
            j[0][1] = (r2.left - r.left) / e2;
            j[1][0] = (r1.right - r.right) / e1;
            j[1][1] = (r2.right - r.right) / e2;
            have_j = true;
        }
        const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if (det == 0.0 || !std::isfinite(det)) {
            throw ShootingDiverged("solve_selfsimilar: singular shooting Jacobian");
        }
        const double d0 = (j[1][1] * r.left - j[0][1] * r.right) / det;
        const double d1 = (j[0][0] * r.right - j[1][0] * r.left) / det;
        double step = 1.0;
        ShotResult rn_new{};
        bool ok = false;
        for (int ls = 0; ls < 8; ++ls) {
            const double t0 = th0 - step * d0;
            const double t1 = dth0 - step * d1;
            if (t0 > 0.0) {
                try {
                    rn_new = shoot(spec, prof.a, prof.xi_max, t0, t1);
                    if (std::isfinite(rn_new.left) && std::isfinite(rn_new.right)) {
                        th0 = t0;
                        dth0 = t1;
                        ok = true;
                        break;
                    }
                } catch (const std::runtime_error&) {
                }
            }
            step *= 0.5;
        }
        if (!ok) throw ShootingDiverged("solve_selfsimilar: line search failed");
        r = rn_new;
        have_j = false;  // refresh the Jacobian every step (two extra shots, robust)
    }
    if (it == opt.max_iter &&
        std::max(std::abs(r.left), std::abs(r.right)) > target) {
        throw ShootingDiverged("solve_selfsimilar: iteration cap reached");
    }
    prof.boundary_mismatch = std::max(std::abs(r.left), std::abs(r.right));

    // Fill the dense table by integrating node to node from the centre.
    const int n = opt.grid_points;
    prof.xi.resize(n);
    prof.theta.resize(n);
    prof.dtheta.resize(n);
    const double h = 2.0 * prof.xi_max / (n - 1);
    for (int i = 0; i < n; ++i) prof.xi[i] = -prof.xi_max + h * i;

    OdeRhs f{prof.a};
    num::Ode2 ode;
    ode.rhs = [&f](double t, const double* y, double* dy) { f(t, y, dy); };

    // Centre node index (grid is symmetric for even n the centre falls
    // between nodes; integrate from 0 to each node's coordinate side-wise).
    double y[2] = {th0, dth0};
    double cur = 0.0;
    for (int i = n / 2; i < n; ++i) {
        ode.integrate(cur, prof.xi[i], y);
        cur = prof.xi[i];
        prof.theta[i] = y[0];
        prof.dtheta[i] = y[1];
    }
    y[0] = th0;
    y[1] = dth0;
    cur = 0.0;
    for (int i = n / 2 - 1; i >= 0; --i) {
        ode.integrate(cur, prof.xi[i], y);
        cur = prof.xi[i];
        prof.theta[i] = y[0];
        prof.dtheta[i] = y[1];
    }
    return prof;
}

namespace {

// Similarity-variable helpers: L1 = (ln Theta)', L2 = (ln Theta)'' (from the
// ODE identity), L3 = (ln Theta)'''.
struct LogDerivs {
    double th, dth, l1, l2, l3, ddth;
};

LogDerivs log_derivs(const SelfSimilarProfile& prof, double xi) {
    LogDerivs d{};
    prof.eval(xi, d.th, d.dth);
    d.l1 = d.dth / d.th;
    d.l2 = prof.constant() ? 0.0 : -xi * d.dth / (2.0 * prof.a);
    d.ddth = d.th * (d.l2 + d.l1 * d.l1);
    d.l3 = prof.constant() ? 0.0 : -(d.dth + xi * d.ddth) / (2.0 * prof.a);
    return d;
}

}  // namespace

ContactPoint contact_profile(double x, double t, const SelfSimilarProfile& prof,
                             const ContactWaveSpec& spec, const euler::GasParams& g) {
    if (t < 0) throw std::domain_error("contact_profile: t must be nonnegative");
    const double s = 1.0 + t;
    const double rs = std::sqrt(s);
    const double xi = x / rs;
    const LogDerivs d = log_derivs(prof, xi);
    const double c = g.kappa * (g.gamma - 1.0) / (g.gamma * g.R);

    ContactPoint p{};
    p.theta = d.th;
    p.theta_x = d.dth / rs;
    p.theta_xx = d.ddth / s;
    p.theta_t = -0.5 * xi * d.dth / s;
    p.v = g.R * d.th / spec.p_plus;
    p.v_x = g.R * p.theta_x / spec.p_plus;
    p.v_t = g.R * p.theta_t / spec.p_plus;
    p.u = spec.u_minus + c * d.l1 / rs;
    p.u_x = c * d.l2 / s;
    p.u_t = -0.5 * c * (xi * d.l2 + d.l1) / (s * rs);
    return p;
}

ContactResiduals contact_residuals(double x, double t, const SelfSimilarProfile& prof,
                                   const ContactWaveSpec& spec, const euler::GasParams& g) {
    const double s = 1.0 + t;
    const double xi = x / std::sqrt(s);
    const LogDerivs d = log_derivs(prof, xi);
    const double c = g.kappa * (g.gamma - 1.0) / (g.gamma * g.R);
    const double pr = spec.p_plus / g.R;  // p_+ / R = Theta / vbar

    // Momentum: R1 = ubar_t - mu (ubar_x / vbar)_x, with
    // (ubar_x/vbar)_x = (p_+/R) ((ln Theta)''/Theta)' s^{-3/2} in similarity form.
    const double dl2_over_th = (d.l3 - d.l1 * d.l2) / d.th;
    const double g1 = -0.5 * (xi * d.l2 + d.l1) - g.mu * pr * dl2_over_th;

    // Energy: the conduction and compression terms cancel exactly through the
    // similarity ODE, so the defect is the viscous heating alone:
    // R2 = -mu ubar_x^2 / vbar = -c^2 s^-2 mu (p_+/R) L2^2 / Theta.
    const double g2 = -g.mu * pr * d.l2 * d.l2 / d.th;

    ContactResiduals r{};
    r.r1 = c * g1 / (s * std::sqrt(s));
    r.r2 = c * c * g2 / (s * s);
    return r;
}

ContactResiduals residual_sup_norms(double t, const SelfSimilarProfile& prof,
                                    const ContactWaveSpec& spec, const euler::GasParams& g) {
    ContactResiduals sup{0.0, 0.0};
    if (prof.constant()) return sup;
    const double rs = std::sqrt(1.0 + t);
    for (std::size_t i = 0; i < prof.xi.size(); ++i) {
        const ContactResiduals r = contact_residuals(prof.xi[i] * rs, t, prof, spec, g);
        sup.r1 = std::max(sup.r1, std::abs(r.r1));
        sup.r2 = std::max(sup.r2, std::abs(r.r2));
    }
    return sup;
}

double profile_deriv_l2norm(const SelfSimilarProfile& prof, const ContactWaveSpec& spec,
                            const euler::GasParams& g, ProfileField field, int k, double t) {
    if (prof.constant()) return 0.0;
    if (k < 1 || k > 2) throw std::invalid_argument("profile_deriv_l2norm: k must be 1 or 2");
    const double s = 1.0 + t;
    const double c = g.kappa * (g.gamma - 1.0) / (g.gamma * g.R);

    // Integrate the squared similarity shape over xi by the trapezoid rule on
    // the dense table; the time scaling is exact by self-similarity.
    num::KahanSum acc;
    const double h = prof.xi[1] - prof.xi[0];
    for (std::size_t i = 0; i < prof.xi.size(); ++i) {
        const LogDerivs d = log_derivs(prof, prof.xi[i]);
        double shape = 0.0;
        switch (field) {
            case ProfileField::Theta:
                shape = (k == 1) ? d.dth : d.ddth;
                break;
            case ProfileField::V:
                shape = g.R / spec.p_plus * ((k == 1) ? d.dth : d.ddth);
                break;
            case ProfileField::U:
                // k-th x-derivative of ubar: c (lnTheta)^{(k+1)} s^{-(k+1)/2}.
                shape = c * ((k == 1) ? d.l2 : d.l3);
                break;
            case ProfileField::USpaceFromTime:
                // k-th t-derivative; only k=1 is used.
                shape = -0.5 * c * (prof.xi[i] * d.l2 + d.l1);
                break;
        }
        const double w = (i == 0 || i + 1 == prof.xi.size()) ? 0.5 : 1.0;
        acc.add(w * shape * shape * h);
    }
    const double shape_norm = std::sqrt(acc.value());

    double exponent = 0.0;  // power of (1+t) multiplying the shape norm
    switch (field) {
        case ProfileField::Theta:
        case ProfileField::V:
            exponent = -(2.0 * k - 1.0) / 4.0;
            break;
        case ProfileField::U:
            exponent = -(2.0 * k + 1.0) / 4.0;
            break;
        case ProfileField::USpaceFromTime:
            exponent = -(4.0 * k + 1.0) / 4.0;
            break;
    }
    return shape_norm * std::pow(s, exponent);
}

double profile_l2_rate(const SelfSimilarProfile& prof, const ContactWaveSpec& spec,
                       const euler::GasParams& g, ProfileField field, int k,
                       const std::vector<double>& t_list) {
    if (prof.constant()) {
        throw std::domain_error("profile_l2_rate: degenerate (zero-strength) series");
    }
    std::vector<double> lx, ly;
    for (double t : t_list) {
        const double n = profile_deriv_l2norm(prof, spec, g, field, k, t);
        if (n <= 0.0) throw std::domain_error("profile_l2_rate: nonpositive norm sample");
        lx.push_back(std::log(1.0 + t));
        ly.push_back(std::log(n));
    }
    return num::fit_line(lx, ly).slope;
}

EnvelopeFit fit_gaussian_envelope(const SelfSimilarProfile& prof, double delta) {
    if (prof.constant() || delta <= 0.0) {
        throw std::domain_error("fit_gaussian_envelope: zero-strength profile");
    }
    double peak = 0.0;
    for (double d : prof.dtheta) peak = std::max(peak, std::abs(d));
    std::vector<double> x2, ln;
    for (std::size_t i = 0; i < prof.xi.size(); ++i) {
        const double m = std::abs(prof.dtheta[i]);
        if (m > 1e-12 * peak) {
            x2.push_back(prof.xi[i] * prof.xi[i]);
            ln.push_back(std::log(m));
        }
    }
    const num::LineFit f = num::fit_line(x2, ln);
    EnvelopeFit out{};
    out.c_hat = -f.slope;
    out.c1 = std::exp(f.intercept) / delta;
    return out;
}

}  // namespace lagwave::contact
