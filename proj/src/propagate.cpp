#include "adrg/propagate.hpp"

#include "adrg/frames.hpp"

namespace adrg {

using consts::mu_earth;

namespace {

constexpr double kReentryAltitude = 120.0;  // km

void check_frame(const CartesianState& s, const AccelModelConfig& config) {
    Frame expected = (config.fidelity == Fidelity::low) ? Frame::TOD
                                                        : Frame::J2000;
    if (s.frame != expected)
        fail("FrameMismatch", "state frame does not match fidelity convention");
}

Mat3 skew(const Vec3& a) {
    Mat3 m;
    m <<      0, -a.z(),  a.y(),
          a.z(),      0, -a.x(),
         -a.y(),  a.x(),      0;
    return m;
}

} // namespace

PropagationResult propagate(const CartesianState& s0, double m0,
                            const ControlProfile& control,
                            const SpacecraftParams& params,
                            const AccelModelConfig& config,
                            const IntegratorOptions& opts) {
    control.validate();
    check_frame(s0, config);
    if (m0 <= 0.0) fail("ValidationError", "nonpositive mass");

    double ve = consts::exhaust_velocity_km_s(params.isp_s);
    Epoch epoch0 = s0.epoch;

    PropagationResult out;
    out.samples.reserve(control.t.size());

    VecX y(7);
    y.segment<3>(0) = s0.r;
    y.segment<3>(3) = s0.v;
    y[6] = m0;

    auto record = [&](double t) {
        TrajectorySample smp;
        smp.t = t;
        smp.state.r = y.segment<3>(0);
        smp.state.v = y.segment<3>(3);
        smp.state.frame = s0.frame;
        smp.state.epoch = epoch0 + t;
        smp.mass = y[6];
        out.samples.push_back(smp);
    };
    record(control.t.front());

    for (size_t i = 0; i < control.intervals(); ++i) {
        double ta = control.t[i], tb = control.t[i + 1];
        Vec3 u = control.accel_rtn[i];
        int eta = control.eta[i];
        double u_mag = u.norm();

        OdeRhs rhs = [&](double t, const VecX& x, VecX& dx) {
            Vec3 r = x.segment<3>(0);
            Vec3 v = x.segment<3>(3);
            double m = x[6];
            if (r.norm() - consts::r_earth < kReentryAltitude)
                fail("Reentry", "altitude below 120 km");
            Vec3 acc = accel_natural(r, v, m, epoch0 + t, params, config);
            if (eta && u_mag > 0.0) acc += rtn_basis(r, v) * u;
            dx.segment<3>(0) = v;
            dx.segment<3>(3) = acc;
            dx[6] = (eta && u_mag > 0.0) ? -m * u_mag / ve : 0.0;
        };
        y = integrate_rk45(rhs, ta, tb, y, opts);
        record(tb);
    }

    out.final_mass = y[6];
    return out;
}

CartesianState propagate_coast(const CartesianState& s0, double m0, double dt,
                               const SpacecraftParams& params,
                               const AccelModelConfig& config,
                               const IntegratorOptions& opts) {
    ControlProfile c;
    c.t = {0.0, dt};
    c.accel_rtn = {Vec3::Zero()};
    c.eta = {0};
    if (dt == 0.0) return s0;
    if (dt < 0.0) {
        // Backward coast (used by phase shifts): integrate directly.
        check_frame(s0, config);
        VecX y(6);
        y.segment<3>(0) = s0.r;
        y.segment<3>(3) = s0.v;
        OdeRhs rhs = [&](double t, const VecX& x, VecX& dx) {
            Vec3 r = x.segment<3>(0);
            Vec3 v = x.segment<3>(3);
            dx.segment<3>(0) = v;
            dx.segment<3>(3) = accel_natural(r, v, m0, s0.epoch + t, params, config);
        };
        y = integrate_rk45(rhs, 0.0, dt, y, opts);
        CartesianState s = s0;
        s.r = y.segment<3>(0);
        s.v = y.segment<3>(3);
        s.epoch = s0.epoch + dt;
        return s;
    }
    auto res = propagate(s0, m0, c, params, config, opts);
    return res.samples.back().state;
}

void lowfid_accel_jacobian(const Vec3& r, const Vec3& v, double mass,
                           const Vec3& u_rtn, const SpacecraftParams& params,
                           const DensityTable& table,
                           Mat3& da_dr, Mat3& da_dv) {
    double rn = r.norm();
    Vec3 rhat = r / rn;
    Mat3 I = Mat3::Identity();

    // Point mass: mu (3 rhat rhat' - I) / r^3.
    da_dr = mu_earth / (rn * rn * rn) * (3.0 * rhat * rhat.transpose() - I);
    da_dv = Mat3::Zero();

    // J2 term: gradient of K [7.5 z^2 r / r^7 - 1.5 r / r^5 - 3 z zhat / r^5].
    {
        double K = consts::j2 * mu_earth * consts::r_earth * consts::r_earth;
        double z = r.z();
        double r5 = std::pow(rn, 5), r7 = std::pow(rn, 7);
        Vec3 zhat = Vec3::UnitZ();
        Mat3 t1 = 7.5 * K * (2.0 * z * r * zhat.transpose() / r7
                             + z * z * I / r7
                             - 7.0 * z * z * r * rhat.transpose() / (r7 * rn));
        Mat3 t2 = -1.5 * K * (I / r5 - 5.0 * r * rhat.transpose() / (r5 * rn));
        Mat3 t3 = -3.0 * K * (zhat * zhat.transpose() / r5
                              - 5.0 * z * zhat * rhat.transpose() / (r5 * rn));
        da_dr += t1 + t2 + t3;
    }

    // Drag term.
    {
        double alt = rn - consts::r_earth;
        double rho = table.density(alt);
        if (rho > 0.0) {
            double q = 0.5 * rho * params.cd * params.area_m2 / mass * 1e3;
            double vn = v.norm();
            da_dv += -q * (vn * I + v * v.transpose() / vn);
            double dlnrho = table.log_slope(alt);
            da_dr += -q * dlnrho * vn * v * rhat.transpose();
        }
    }

    // State dependence of the RTN rotation applied to the ZOH control.
    if (u_rtn.norm() > 0.0) {
        Vec3 h = r.cross(v);
        double hn = h.norm();
        Vec3 en = h / hn;
        Vec3 er = rhat;
        Mat3 der_dr = (I - er * er.transpose()) / rn;
        Mat3 den_dh = (I - en * en.transpose()) / hn;
        Mat3 dh_dr = -skew(v);
        Mat3 dh_dv = skew(r);
        Mat3 den_dr = den_dh * dh_dr;
        Mat3 den_dv = den_dh * dh_dv;

        // et = en x er.
        Mat3 det_dr, det_dv;
        for (int j = 0; j < 3; ++j) {
            det_dr.col(j) = den_dr.col(j).cross(er) + en.cross(der_dr.col(j));
            det_dv.col(j) = den_dv.col(j).cross(er);
        }
        da_dr += u_rtn.x() * der_dr + u_rtn.y() * det_dr + u_rtn.z() * den_dr;
        da_dv += u_rtn.y() * det_dv + u_rtn.z() * den_dv;
    }
}

CartesianStm stm_interval_cartesian(const CartesianState& x0, double m0,
                                    const Vec3& u_rtn, double dt,
                                    const SpacecraftParams& params,
                                    const AccelModelConfig& config,
                                    const IntegratorOptions& opts) {
    if (config.fidelity != Fidelity::low)
        fail("ValidationError", "variational equations model low fidelity only");
    check_frame(x0, config);
    const DensityTable& table = density_table(config.density_model);

    CartesianStm out;
    if (dt == 0.0) {
        out.x1 = x0;
        return out;
    }

    // State layout: [r v | Phi_A (36, column-major) | Phi_B (18)].
    VecX y(6 + 36 + 18);
    y.segment<3>(0) = x0.r;
    y.segment<3>(3) = x0.v;
    Eigen::Map<Mat6>(y.data() + 6) = Mat6::Identity();
    Eigen::Map<Mat63>(y.data() + 42) = Mat63::Zero();

    OdeRhs rhs = [&](double t, const VecX& x, VecX& dx) {
        Vec3 r = x.segment<3>(0);
        Vec3 v = x.segment<3>(3);
        Vec3 acc = accel_gravity(r) + accel_j2(r)
                 + accel_drag(r, v, m0, params, table);
        Mat3 rot = rtn_basis(r, v);
        acc += rot * u_rtn;

        Mat3 da_dr, da_dv;
        lowfid_accel_jacobian(r, v, m0, u_rtn, params, table, da_dr, da_dv);

        Mat6 F = Mat6::Zero();
        F.block<3, 3>(0, 3) = Mat3::Identity();
        F.block<3, 3>(3, 0) = da_dr;
        F.block<3, 3>(3, 3) = da_dv;

        Eigen::Map<const Mat6> phiA(x.data() + 6);
        Eigen::Map<const Mat63> phiB(x.data() + 42);

        dx.segment<3>(0) = v;
        dx.segment<3>(3) = acc;
        Eigen::Map<Mat6>(dx.data() + 6) = F * phiA;
        Mat63 dB = F * phiB;
        dB.block<3, 3>(3, 0) += rot;
        Eigen::Map<Mat63>(dx.data() + 42) = dB;
        (void)t;
    };

    y = integrate_rk45(rhs, 0.0, dt, y, opts);

    out.x1.r = y.segment<3>(0);
    out.x1.v = y.segment<3>(3);
    out.x1.frame = x0.frame;
    out.x1.epoch = x0.epoch + dt;
    out.a = Eigen::Map<Mat6>(y.data() + 6);
    out.b = Eigen::Map<Mat63>(y.data() + 42);
    return out;
}

} // namespace adrg
