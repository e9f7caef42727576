#include "lagwave/numerics.hpp"

#include <algorithm>

namespace lagwave::num {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi,
                     double xtol, double ftol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (std::abs(flo) <= ftol) return lo;
    if (std::abs(fhi) <= ftol) return hi;
    if (flo * fhi > 0.0) {
        throw std::invalid_argument("bisect_newton: root not bracketed");
    }
    double x = 0.5 * (lo + hi);
    double step_old = hi - lo;
    double step = step_old;
    for (int it = 0; it < max_iter; ++it) {
        double fx = f(x);
        if (std::abs(fx) <= ftol) return x;
        if (flo * fx <= 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= xtol) return 0.5 * (lo + hi);
        // Newton candidate; bisect when it leaves the bracket or stops making
        // geometric progress (guards against the tanh-profile two-cycle).
        const double d = df ? df(x) : 0.0;
        bool take_newton = false;
        double xn = 0.0;
        if (d != 0.0) {
            xn = x - fx / d;
            take_newton = xn > lo && xn < hi && 2.0 * std::abs(fx) <= std::abs(step_old * d);
        }
        step_old = step;
        if (take_newton) {
            step = xn - x;
            x = xn;
        } else {
            step = 0.5 * (hi - lo);
            x = 0.5 * (lo + hi);
        }
    }
    return x;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        throw std::invalid_argument("fit_line: need at least two matching samples");
    }
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (out.intercept + out.slope * x[i]);
        ss_res += r * r;
    }
    if (n > 2) out.slope_se = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
    return out;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

void Ode2::integrate(double t0, double t1, double y[2]) const {
    constexpr int N = 2;
    if (t0 == t1) return;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::min(1e-3, std::abs(t1 - t0));
    double k1[N], k2[N], k3[N], k4[N], k5[N], k6[N], k7[N], yt[N], y5[N];
    rhs(t, y, k1);
    int guard = 0;
    while (dir * (t1 - t) > 0.0) {
        if (++guard > 2000000) throw std::runtime_error("Ode2: step count exceeded");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, yt, k2);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (int i = 0; i < N; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, y5, k7);

        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(ei) / sc);
        }
        if (err <= 1.0) {
            t += h;
            for (int i = 0; i < N; ++i) {
                y[i] = y5[i];
                k1[i] = k7[i];  // FSAL
            }
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
            throw std::runtime_error("Ode2: step size underflow");
        }
    }
}

double trapezoid(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    KahanSum s;
    s.add(0.5 * f.front());
    for (std::size_t i = 1; i + 1 < n; ++i) s.add(f[i]);
    s.add(0.5 * f.back());
    return h * s.value();
}

}  // namespace lagwave::num
