#include "adrg/forces.hpp"

#include "adrg/ephemeris.hpp"

namespace adrg {

using consts::mu_earth;
using consts::r_earth;

Vec3 accel_gravity(const Vec3& r) {
    double rn = r.norm();
    return -mu_earth / (rn * rn * rn) * r;
}

Vec3 accel_j2_with(const Vec3& r, double j2) {
    double rn = r.norm();
    double s = r.z() / rn;
    double c = j2 * mu_earth * r_earth * r_earth / std::pow(rn, 4);
    Vec3 rhat = r / rn;
    return c * (1.5 * (5.0 * s * s - 1.0) * rhat - 3.0 * s * Vec3::UnitZ());
}

Vec3 accel_j2(const Vec3& r) { return accel_j2_with(r, consts::j2); }

Vec3 accel_zonal(const Vec3& r, int degree) {
    if (degree < 2 || degree > 6)
        fail("ValidationError", "zonal degree must be in [2, 6]");
    static const double jn[7] = {0, 0, consts::j2, consts::j3, consts::j4,
                                 consts::j5, consts::j6};
    double rn = r.norm();
    double s = r.z() / rn;
    Vec3 rhat = r / rn;

    // Legendre P_n(s) and P_n'(s) by recursion.
    double p_prev = 1.0, p_cur = s;       // P0, P1
    double dp_prev = 0.0, dp_cur = 1.0;   // P0', P1'
    Vec3 acc = Vec3::Zero();
    double re_over_r = r_earth / rn;
    double re_pow = re_over_r;  // (Re/r)^n starting at n=1
    for (int n = 2; n <= degree; ++n) {
        double p_next = ((2 * n - 1) * s * p_cur - (n - 1) * p_prev) / n;
        double dp_next = dp_prev + (2 * n - 1) * p_cur;
        p_prev = p_cur; p_cur = p_next;
        dp_prev = dp_cur; dp_cur = dp_next;
        re_pow *= re_over_r;
        double coef = jn[n] * mu_earth * re_pow / (rn * rn);
        acc += coef * ((n + 1) * p_cur * rhat
                       - dp_cur * (Vec3::UnitZ() - s * rhat));
    }
    return acc;
}

Vec3 accel_drag(const Vec3& r, const Vec3& v, double mass_kg,
                const SpacecraftParams& params, const DensityTable& table,
                double density_scale) {
    double altitude = r.norm() - r_earth;
    double rho = table.density(altitude) * density_scale;  // kg/m^3
    if (rho == 0.0) return Vec3::Zero();
    double vn = v.norm();
    // 0.5 rho Cd A v^2 / m with v in km/s gives km^2/(m s^2); the 1e3
    // factor lands the result in km/s^2.
    double mag = 0.5 * rho * params.cd * params.area_m2 * vn * vn / mass_kg * 1e3;
    return -mag / vn * v;
}

double high_fidelity_density_scale(double altitude_km) {
    return altitude_km < 500.0 ? 1.3 : 1.0;
}

Vec3 accel_srp(const Vec3& r, const Epoch& epoch, double mass_kg,
               const SpacecraftParams& params) {
    Vec3 sun = sun_position(epoch);
    if (in_cylindrical_shadow(r, sun)) return Vec3::Zero();
    Vec3 away = (r - sun).normalized();
    // P * Cr * A / m in m/s^2, converted to km/s^2.
    double mag = consts::p_srp * consts::cr_srp * params.area_m2 / mass_kg * 1e-3;
    return mag * away;
}

Vec3 accel_third_body(const Vec3& r, const Epoch& epoch, ThirdBody body) {
    Vec3 rb = (body == ThirdBody::sun) ? sun_position(epoch)
                                       : moon_position(epoch);
    double mu_b = (body == ThirdBody::sun) ? consts::mu_sun : consts::mu_moon;
    Vec3 d = rb - r;
    double dn = d.norm(), rbn = rb.norm();
    return mu_b * (d / (dn * dn * dn) - rb / (rbn * rbn * rbn));
}

Vec3 accel_natural(const Vec3& r, const Vec3& v, double mass_kg,
                   const Epoch& epoch, const SpacecraftParams& params,
                   const AccelModelConfig& config) {
    Vec3 acc = accel_gravity(r);
    const DensityTable& table = density_table(config.density_model);
    if (config.fidelity == Fidelity::low) {
        if (config.include_j2) acc += accel_j2(r);
        if (config.include_drag)
            acc += accel_drag(r, v, mass_kg, params, table);
    } else {
        acc += accel_zonal(r, config.zonal_degree);
        double alt = r.norm() - r_earth;
        if (config.include_drag)
            acc += accel_drag(r, v, mass_kg, params, table,
                              high_fidelity_density_scale(alt));
        if (config.include_srp) acc += accel_srp(r, epoch, mass_kg, params);
        if (config.include_third_body) {
            acc += accel_third_body(r, epoch, ThirdBody::sun);
            acc += accel_third_body(r, epoch, ThirdBody::moon);
        }
    }
    return acc;
}

int eclipse_profile(double l_bar, double l_center, double dc) {
    if (dc <= 0.0 || dc > 1.0) fail("ValidationError", "duty cycle outside (0, 1]");
    double q1 = std::acos(std::cos(l_bar - l_center));
    double q2 = std::acos(std::cos(l_bar - l_center - consts::pi));
    double half = 0.5 * consts::pi * (1.0 - dc);
    return (q1 < half || q2 < half) ? 0 : 1;
}

ShadowCenter shadow_center(const CartesianState& s) {
    Vec3 sun = sun_position(s.epoch).normalized();
    Vec3 h = s.r.cross(s.v);
    Vec3 w = h.normalized();

    // Anti-sun direction projected into the orbit plane. A sun exactly
    // normal to the plane leaves no preferred center; report no eclipse
    // with a conventional center so the duty cycle is still honored.
    Vec3 anti = -sun;
    Vec3 proj = anti - anti.dot(w) * w;
    if (proj.norm() < 1e-9) {
        ShadowCenter out;
        out.l_center = 0.0;
        out.has_eclipse = false;
        return out;
    }
    proj.normalize();

    // Ascending node direction; for equatorial orbits fall back to x.
    Vec3 node = Vec3::UnitZ().cross(w);
    if (node.norm() < 1e-9) node = Vec3::UnitX();
    node.normalize();
    Vec3 m = w.cross(node);

    ShadowCenter out;
    out.l_center = wrap_two_pi(std::atan2(proj.dot(m), proj.dot(node)));

    double sin_beta = sun.dot(w);
    double r_orbit = s.r.norm();
    out.has_eclipse = r_orbit * std::abs(sin_beta) < consts::r_earth;
    return out;
}

} // namespace adrg
