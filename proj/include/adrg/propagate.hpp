#ifndef ADRG_PROPAGATE_HPP
#define ADRG_PROPAGATE_HPP

#include <vector>

#include "adrg/forces.hpp"
#include "adrg/integrate.hpp"

namespace adrg {

/**
 * Zero-order-hold control: RTN acceleration and thrust gate per node
 * interval. t has one more entry than accel_rtn/eta.
 */
struct ControlProfile {
    std::vector<double> t;         // s, relative to the state epoch
    std::vector<Vec3> accel_rtn;   // km/s^2, commanded acceleration
    std::vector<int> eta;          // thrust gate per interval

    size_t intervals() const { return accel_rtn.size(); }
    void validate() const {
        if (t.size() != accel_rtn.size() + 1 || eta.size() != accel_rtn.size())
            fail("ValidationError", "control profile sizes inconsistent");
    }
};

struct TrajectorySample {
    double t = 0.0;          // s from start
    CartesianState state;
    double mass = 0.0;       // kg
};

struct PropagationResult {
    std::vector<TrajectorySample> samples;  // one per node time
    double final_mass = 0.0;
};

/**
 * Propagate under the configured natural forces plus the zero-order-hold
 * control. The control's RTN frame follows the instantaneous state; mass
 * flows as mdot = -m |a| eta / (Isp g0). States below 120 km altitude
 * raise Reentry. Low fidelity expects (and keeps) TOD states; high
 * fidelity expects J2000.
 */
PropagationResult propagate(const CartesianState& s0, double m0,
                            const ControlProfile& control,
                            const SpacecraftParams& params,
                            const AccelModelConfig& config,
                            const IntegratorOptions& opts = {});

// Coast propagation (no thrust) over dt seconds.
CartesianState propagate_coast(const CartesianState& s0, double m0, double dt,
                               const SpacecraftParams& params,
                               const AccelModelConfig& config,
                               const IntegratorOptions& opts = {});

// ------------------------------------------------------------------
// Variational equations (low-fidelity dynamics)
// ------------------------------------------------------------------

struct CartesianStm {
    Mat6 a = Mat6::Identity();   // d x(t1) / d x(t0)
    Mat63 b = Mat63::Zero();     // d x(t1) / d u (ZOH RTN acceleration)
    CartesianState x1;           // propagated nominal endpoint
};

/**
 * Integrate the low-fidelity variational equations over one interval
 * with the given ZOH RTN control held over the whole span. The mass is
 * frozen at m0 for the drag Jacobian.
 */
CartesianStm stm_interval_cartesian(const CartesianState& x0, double m0,
                                    const Vec3& u_rtn, double dt,
                                    const SpacecraftParams& params,
                                    const AccelModelConfig& config,
                                    const IntegratorOptions& opts = {});

// Jacobian of the low-fidelity acceleration wrt position and velocity,
// including the state dependence of the RTN control rotation.
void lowfid_accel_jacobian(const Vec3& r, const Vec3& v, double mass,
                           const Vec3& u_rtn, const SpacecraftParams& params,
                           const DensityTable& table,
                           Mat3& da_dr, Mat3& da_dv);

} // namespace adrg

#endif
