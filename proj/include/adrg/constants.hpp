#ifndef ADRG_CONSTANTS_HPP
#define ADRG_CONSTANTS_HPP

namespace adrg {

// Physical constants. All internal computation uses km, km/s, rad, s, kg.
namespace consts {

inline constexpr double mu_earth   = 3.986e5;          // km^3/s^2
inline constexpr double j2         = 1.08262668e-3;    // zonal harmonic
inline constexpr double g0         = 9.80665;          // m/s^2
inline constexpr double r_earth    = 6378.137;         // km

// Higher zonals (used by the high-fidelity force model only).
inline constexpr double j3 = -2.5326564853e-6;
inline constexpr double j4 = -1.6196215908e-6;
inline constexpr double j5 = -2.2729608234e-7;
inline constexpr double j6 = 5.4068123936e-7;

inline constexpr double mu_sun  = 1.32712440018e11;    // km^3/s^2
inline constexpr double mu_moon = 4902.800066;         // km^3/s^2
inline constexpr double au_km   = 149597870.7;         // km

// Solar radiation pressure at 1 AU, N/m^2.
inline constexpr double p_srp = 4.56e-6;
// Cannonball reflectivity coefficient.
inline constexpr double cr_srp = 1.3;

inline constexpr double pi     = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;

inline constexpr double deg2rad = pi / 180.0;
inline constexpr double rad2deg = 180.0 / pi;

inline constexpr double sec_per_day = 86400.0;

// Effective exhaust velocity in km/s for a given Isp in seconds.
inline constexpr double exhaust_velocity_km_s(double isp_s) {
    return isp_s * g0 * 1e-3;
}

} // namespace consts
} // namespace adrg

#endif
