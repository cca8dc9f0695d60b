#include "adrg/integrate.hpp"

#include <algorithm>

namespace adrg {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                 c5 = 8.0 / 9.0;

constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

} // namespace

VecX integrate_rk45_observed(
    const OdeRhs& rhs, double t0, double t1, VecX x,
    const std::function<void(double, const VecX&)>& observer,
    const IntegratorOptions& opts) {
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) {
        if (observer) observer(t0, x);
        return x;
    }

    const int n = static_cast<int>(x.size());
    VecX k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), xt(n), x5(n), err(n);

    double t = t0;
    double h = dir * std::min(opts.initial_step, span);
    rhs(t, x, k1);  // FSAL seed
    if (observer) observer(t, x);

    long steps = 0;
    while (dir * (t1 - t) > 0.0) {
        if (++steps > opts.max_steps)
            fail("IntegratorFailure", "step limit exceeded");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;

        xt = x + h * (a21 * k1);
        rhs(t + c2 * h, xt, k2);
        xt = x + h * (a31 * k1 + a32 * k2);
        rhs(t + c3 * h, xt, k3);
        xt = x + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * h, xt, k4);
        xt = x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * h, xt, k5);
        xt = x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + h, xt, k6);
        x5 = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + h, x5, k7);

        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double err_norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double sc = opts.atol
                      + opts.rtol * std::max(std::abs(x[i]), std::abs(x5[i]));
            err_norm = std::max(err_norm, std::abs(err[i]) / sc);
        }

        if (err_norm <= 1.0) {
            t += h;
            x.swap(x5);
            k1.swap(k7);  // FSAL
            if (observer) observer(t, x);
        }

        double fac = 0.9 * std::pow(std::max(err_norm, 1e-10), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::abs(h) < opts.min_step)
            fail("IntegratorFailure", "step size collapsed");
    }
    return x;
}

VecX integrate_rk45(const OdeRhs& rhs, double t0, double t1, VecX x0,
                    const IntegratorOptions& opts) {
    return integrate_rk45_observed(rhs, t0, t1, std::move(x0), nullptr, opts);
}

} // namespace adrg
