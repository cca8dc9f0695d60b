#ifndef ADRG_LINEARIZE_HPP
#define ADRG_LINEARIZE_HPP

#include <vector>

#include "adrg/elements.hpp"
#include "adrg/propagate.hpp"

namespace adrg {

/**
 * State-transition matrices of the low-fidelity dynamics expressed in
 * GEqOE coordinates about a guess trajectory: A = dx(t+dt)/dx(t),
 * B = dx(t+dt)/du for a ZOH RTN control. Built by integrating the
 * cartesian variational equations and sandwiching with the coordinate
 * Jacobians at both ends.
 */
struct Stm {
    Mat6 a = Mat6::Identity();
    Mat63 b = Mat63::Zero();
    int node_index = 0;
};

enum class StmCoord { CC, COE, MEE, CEqOE, GEqOE };

// Jacobian d(geqoe)/d(cartesian) at the state, by central differences.
Mat6 geqoe_cart_jacobian(const CartesianState& s, bool include_j2 = true);

// Jacobian of a coordinate set wrt cartesian components at the state.
Mat6 coord_cart_jacobian(const CartesianState& s, StmCoord coord);

// STM of one interval in GEqOE space.
Stm stm_interval(const CartesianState& x0, double m0, const Vec3& u_rtn,
                 double dt, const SpacecraftParams& params,
                 const AccelModelConfig& config,
                 const IntegratorOptions& opts = {});

// STM of one interval in an arbitrary coordinate set (no control input),
// used by the nonlinearity studies.
Mat6 stm_interval_coord(const CartesianState& x0, double m0, double dt,
                        const SpacecraftParams& params,
                        const AccelModelConfig& config, StmCoord coord,
                        const IntegratorOptions& opts = {});

/**
 * Nonlinearity index v = sup_i ||A(x_i) - A(x_bar)|| / ||A(x_bar)||
 * (Frobenius norm) over perturbed initial states propagated for tspan
 * in the chosen coordinates.
 */
double junkins_index(const CartesianState& reference, double m0,
                     const std::vector<CartesianState>& perturbed,
                     double tspan, const SpacecraftParams& params,
                     const AccelModelConfig& config, StmCoord coord,
                     const IntegratorOptions& opts = {});

// Per-axis +1 km / +1 m/s perturbations of a reference state.
std::vector<CartesianState> axis_perturbations(const CartesianState& ref,
                                               double dr_km = 1.0,
                                               double dv_km_s = 1e-3);

/**
 * Taylor-based nonlinearity index per GEqOE component: the relative
 * change of the interval STM under a unit perturbation of that state
 * component, floored at 1e-12 so trust regions stay finite.
 */
Vec6 taylor_index(const CartesianState& x0, double m0, const Vec3& u_rtn,
                  double dt, const Mat6& a_nominal,
                  const SpacecraftParams& params,
                  const AccelModelConfig& config,
                  const IntegratorOptions& opts = {});

// Trust-region half-width per component: min(zeta / nu_t, 10% of scale).
Vec6 trust_region_halfwidth(const Vec6& nu_t, const Vec6& state_scale,
                            double zeta);

} // namespace adrg

#endif
