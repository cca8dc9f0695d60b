#ifndef ADRG_ELEMENTS_HPP
#define ADRG_ELEMENTS_HPP

#include "adrg/core.hpp"

namespace adrg {

enum class ElementKind { osculating, mean };

/**
 * Classical orbital elements (a, e, i, raan, argp, ta).
 * Angles are stored wrapped to [0, 2*pi). For near-singular geometry
 * (e < 1e-8 or i < 1e-8) conversions route through equinoctial elements
 * and conventionalize argp = 0 (and raan = 0 when i ~ 0).
 */
struct ClassicalElements {
    double a = 0.0;      // km
    double e = 0.0;
    double i = 0.0;      // rad
    double raan = 0.0;   // rad
    double argp = 0.0;   // rad
    double ta = 0.0;     // rad, true anomaly
    ElementKind kind = ElementKind::osculating;
    Frame frame = Frame::TOD;
    Epoch epoch;

    double arg_latitude() const { return wrap_two_pi(argp + ta); }
    double true_longitude() const { return wrap_two_pi(raan + argp + ta); }
};

/**
 * Modified equinoctial elements (p, f, g, h, k, L).
 *   f = e cos(argp+raan), g = e sin(argp+raan)
 *   h = tan(i/2) cos(raan), k = tan(i/2) sin(raan)
 *   L = raan + argp + ta (true longitude)
 */
struct ModifiedEquinoctial {
    double p = 0.0;      // km, semilatus rectum
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
    double k = 0.0;
    double L = 0.0;      // rad
    ElementKind kind = ElementKind::osculating;
    Frame frame = Frame::TOD;
    Epoch epoch;

    double ecc() const { return std::sqrt(f * f + g * g); }
    double sma() const { return p / (1.0 - f * f - g * g); }
};

/**
 * Generalized equinoctial orbital elements with an embedded J2 potential.
 *   nu      generalized mean motion, (-2*energy)^{3/2}/mu with the J2
 *           potential included in the energy
 *   p1, p2  generalized eccentricity-vector components (sin / cos of the
 *           generalized longitude of periapsis)
 *   q1, q2  tan(i/2) sin(raan), tan(i/2) cos(raan)
 *   lon     generalized mean longitude (fast angle)
 * With the embedded potential set to zero the set degenerates to the
 * classical equinoctial elements.
 */
struct GEqOE {
    double nu = 0.0;     // rad/s
    double p1 = 0.0;
    double p2 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double lon = 0.0;    // rad
    ElementKind kind = ElementKind::osculating;
    Frame frame = Frame::TOD;
    Epoch epoch;

    Vec6 as_vec() const {
        Vec6 v;
        v << nu, p1, p2, q1, q2, lon;
        return v;
    }
    static GEqOE from_vec(const Vec6& v, Frame fr, const Epoch& ep) {
        GEqOE g;
        g.nu = v[0]; g.p1 = v[1]; g.p2 = v[2];
        g.q1 = v[3]; g.q2 = v[4]; g.lon = v[5];
        g.frame = fr;
        g.epoch = ep;
        return g;
    }
};

// ------------------------------------------------------------------
// Conversions (all osculating unless stated otherwise)
// ------------------------------------------------------------------

ClassicalElements cart_to_coe(const CartesianState& s);
CartesianState coe_to_cart(const ClassicalElements& e);

ModifiedEquinoctial coe_to_mee(const ClassicalElements& e);
ClassicalElements mee_to_coe(const ModifiedEquinoctial& m);

ModifiedEquinoctial cart_to_mee(const CartesianState& s);
CartesianState mee_to_cart(const ModifiedEquinoctial& m);

// GEqOE conversions. include_j2 = false embeds a zero potential, which
// reduces the set to classical equinoctial elements.
GEqOE cart_to_geqoe(const CartesianState& s, bool include_j2 = true);
CartesianState geqoe_to_cart(const GEqOE& g, bool include_j2 = true);

// J2 perturbing potential (km^2/s^2); the same function backs the GEqOE
// energy embedding and (through its gradient) the J2 acceleration.
double j2_potential(const Vec3& r);

// Kepler solvers.
double mean_to_ecc_anomaly(double mean_anom, double e);
double ecc_to_true_anomaly(double ecc_anom, double e);
double true_to_ecc_anomaly(double true_anom, double e);
double ecc_to_mean_anomaly(double ecc_anom, double e);

// Equinoctial-form Kepler equation: lambda = F - f sinF + g cosF.
double equinoctial_ecc_longitude(double lambda, double f, double g);

} // namespace adrg

#endif
