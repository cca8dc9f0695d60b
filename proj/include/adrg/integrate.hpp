#ifndef ADRG_INTEGRATE_HPP
#define ADRG_INTEGRATE_HPP

#include <functional>

#include "adrg/core.hpp"

namespace adrg {

/**
 * Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince) integrator.
 */
struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 10.0;      // s
    double min_step = 1e-9;          // s
    long max_steps = 20'000'000;
};

using OdeRhs = std::function<void(double t, const VecX& x, VecX& dxdt)>;

// Integrate x' = f(t, x) from t0 to t1 (t1 may be < t0). Returns the
// state at t1. Throws IntegratorFailure when the step control collapses.
VecX integrate_rk45(const OdeRhs& rhs, double t0, double t1, VecX x0,
                    const IntegratorOptions& opts = {});

// Same, invoking observer(t, x) at every accepted step (including both
// endpoints).
VecX integrate_rk45_observed(
    const OdeRhs& rhs, double t0, double t1, VecX x0,
    const std::function<void(double, const VecX&)>& observer,
    const IntegratorOptions& opts = {});

} // namespace adrg

#endif
