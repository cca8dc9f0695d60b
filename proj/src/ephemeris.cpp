#include "adrg/ephemeris.hpp"

namespace adrg {

namespace {
constexpr double d2r = consts::deg2rad;

double mean_obliquity(double T) {
    return (23.439291 - 0.0130042 * T) * d2r;
}
} // namespace

Vec3 sun_position(const Epoch& epoch) {
    double T = epoch.julian_centuries();
    double lam_mean = 280.460 + 36000.771 * T;          // deg
    double m = (357.5291092 + 35999.05034 * T) * d2r;   // rad
    double lam_ecl = (lam_mean + 1.914666471 * std::sin(m)
                      + 0.019994643 * std::sin(2.0 * m)) * d2r;
    double r_au = 1.000140612 - 0.016708617 * std::cos(m)
                - 0.000139589 * std::cos(2.0 * m);
    double eps = mean_obliquity(T);
    double r = r_au * consts::au_km;
    return Vec3(r * std::cos(lam_ecl),
                r * std::cos(eps) * std::sin(lam_ecl),
                r * std::sin(eps) * std::sin(lam_ecl));
}

Vec3 moon_position(const Epoch& epoch) {
    double T = epoch.julian_centuries();
    auto s = [](double deg) { return std::sin(deg * d2r); };
    auto c = [](double deg) { return std::cos(deg * d2r); };

    double lam = 218.32 + 481267.8813 * T
               + 6.29 * s(134.9 + 477198.85 * T)
               - 1.27 * s(259.2 - 413335.38 * T)
               + 0.66 * s(235.7 + 890534.23 * T)
               + 0.21 * s(269.9 + 954397.70 * T)
               - 0.19 * s(357.5 + 35999.05 * T)
               - 0.11 * s(186.6 + 966404.05 * T);
    double phi = 5.13 * s(93.3 + 483202.03 * T)
               + 0.28 * s(228.2 + 960400.87 * T)
               - 0.28 * s(318.3 + 6003.18 * T)
               - 0.17 * s(217.6 - 407332.20 * T);
    double par = 0.9508
               + 0.0518 * c(134.9 + 477198.85 * T)
               + 0.0095 * c(259.2 - 413335.38 * T)
               + 0.0078 * c(235.7 + 890534.23 * T)
               + 0.0028 * c(269.9 + 954397.70 * T);

    double rm = consts::r_earth / std::sin(par * d2r);
    double lam_r = lam * d2r, phi_r = phi * d2r;
    double eps = mean_obliquity(T);
    double ce = std::cos(eps), se = std::sin(eps);

    Vec3 ecl(std::cos(phi_r) * std::cos(lam_r),
             std::cos(phi_r) * std::sin(lam_r),
             std::sin(phi_r));
    return rm * Vec3(ecl.x(),
                     ce * ecl.y() - se * ecl.z(),
                     se * ecl.y() + ce * ecl.z());
}

bool in_cylindrical_shadow(const Vec3& r, const Vec3& sun_dir) {
    Vec3 s = sun_dir.normalized();
    double along = r.dot(s);
    if (along >= 0.0) return false;  // sunlit side
    Vec3 perp = r - along * s;
    return perp.norm() < consts::r_earth;
}

} // namespace adrg
