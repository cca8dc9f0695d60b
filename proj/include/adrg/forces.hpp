#ifndef ADRG_FORCES_HPP
#define ADRG_FORCES_HPP

#include "adrg/density.hpp"
#include "adrg/core.hpp"

namespace adrg {

enum class Fidelity { low, high };

/**
 * Spacecraft bus and engine parameters.
 */
struct SpacecraftParams {
    double t_max_n = 0.0;   // N
    double isp_s = 0.0;     // s
    double m0_kg = 0.0;     // kg
    double cd = 0.0;
    double area_m2 = 0.0;   // m^2
    double dc_req = 1.0;    // required duty cycle, (0, 1]

    void validate() const {
        if (t_max_n <= 0 || isp_s <= 0 || m0_kg <= 0 || cd <= 0 || area_m2 <= 0)
            fail("ValidationError", "spacecraft parameters must be positive");
        if (dc_req <= 0.0 || dc_req > 1.0)
            fail("ValidationError", "dc_req must lie in (0, 1]");
    }
    // Thrust acceleration in km/s^2 at mass m.
    double accel_km_s2(double m_kg) const { return t_max_n / m_kg * 1e-3; }
};

/**
 * Force model configuration. Low fidelity is the convex-tracking model
 * (two-body + J2 + drag) in TOD; high fidelity adds zonals to J6, SRP
 * and Sun/Moon third bodies in J2000, and scales the drag density by
 * 1.3 below 500 km.
 */
struct AccelModelConfig {
    Fidelity fidelity = Fidelity::low;
    int zonal_degree = 2;
    bool include_srp = false;
    bool include_third_body = false;
    bool include_j2 = true;     // test hook: disable the oblateness term
    bool include_drag = true;   // test hook: disable drag
    DensityModel density_model = DensityModel::layered_exponential;

    static AccelModelConfig two_body() {
        AccelModelConfig c;
        c.include_j2 = false;
        c.include_drag = false;
        return c;
    }

    static AccelModelConfig low_fidelity(
        DensityModel density = DensityModel::layered_exponential) {
        AccelModelConfig c;
        c.fidelity = Fidelity::low;
        c.zonal_degree = 2;
        c.include_srp = false;
        c.include_third_body = false;
        c.density_model = density;
        return c;
    }
    static AccelModelConfig high_fidelity(
        DensityModel density = DensityModel::layered_exponential) {
        AccelModelConfig c;
        c.fidelity = Fidelity::high;
        c.zonal_degree = 6;
        c.include_srp = true;
        c.include_third_body = true;
        c.density_model = density;
        return c;
    }
};

// Point-mass gravity, km/s^2.
Vec3 accel_gravity(const Vec3& r);

// J2 acceleration; accel_zonal(r, 2) reduces to it exactly.
Vec3 accel_j2(const Vec3& r);
Vec3 accel_j2_with(const Vec3& r, double j2);

// Zonal harmonics J2..J_degree (degree in [2, 6]).
Vec3 accel_zonal(const Vec3& r, int degree);

// Atmospheric drag, km/s^2; zero above the table ceiling.
Vec3 accel_drag(const Vec3& r, const Vec3& v, double mass_kg,
                const SpacecraftParams& params, const DensityTable& table,
                double density_scale = 1.0);

// High-fidelity drag density scaling below 500 km.
double high_fidelity_density_scale(double altitude_km);

// Cannonball SRP with cylindrical shadow, km/s^2.
Vec3 accel_srp(const Vec3& r, const Epoch& epoch, double mass_kg,
               const SpacecraftParams& params);

enum class ThirdBody { sun, moon };
Vec3 accel_third_body(const Vec3& r, const Epoch& epoch, ThirdBody body);

// Total natural (thrust-free) acceleration for the configured model.
// The state is expected in TOD for low fidelity and J2000 for high.
Vec3 accel_natural(const Vec3& r, const Vec3& v, double mass_kg,
                   const Epoch& epoch, const SpacecraftParams& params,
                   const AccelModelConfig& config);

// ------------------------------------------------------------------
// Eclipse / duty-cycle geometry
// ------------------------------------------------------------------

/**
 * Thrust gate at mean argument of latitude l_bar for coast arcs of
 * half-width (pi/2)(1-dc) centered on l_center and its antipode.
 * Returns 0 inside a coast arc, 1 otherwise.
 */
int eclipse_profile(double l_bar, double l_center, double dc);

struct ShadowCenter {
    double l_center = 0.0;  // mean argument of latitude of the shadow axis
    bool has_eclipse = true;
};

// Argument of latitude where the anti-sun direction pierces the orbit
// plane. has_eclipse is false when the orbit never enters the cylinder
// (the coast arcs are still centered on l_center in that case).
ShadowCenter shadow_center(const CartesianState& s);

} // namespace adrg

#endif
