#include "adrg/elements.hpp"

namespace adrg {

using consts::mu_earth;

namespace {

constexpr double kCircularEps = 1e-8;
constexpr double kEquatorialEps = 1e-8;

// Equinoctial in-plane basis from (q1, q2) = tan(i/2)(sin raan, cos raan).
void equinoctial_frame(double q1, double q2, Vec3& ef, Vec3& eg, Vec3& ew) {
    double s2 = 1.0 + q1 * q1 + q2 * q2;
    ef << (1.0 - q1 * q1 + q2 * q2) / s2,
          2.0 * q1 * q2 / s2,
          -2.0 * q1 / s2;
    eg << 2.0 * q1 * q2 / s2,
          (1.0 + q1 * q1 - q2 * q2) / s2,
          2.0 * q2 / s2;
    ew << 2.0 * q1 / s2,
          -2.0 * q2 / s2,
          (1.0 - q1 * q1 - q2 * q2) / s2;
}

} // namespace

double j2_potential(const Vec3& r) {
    double rn = r.norm();
    double s = r.z() / rn;
    return consts::mu_earth * consts::j2 * consts::r_earth * consts::r_earth
           * (3.0 * s * s - 1.0) / (2.0 * rn * rn * rn);
}

double mean_to_ecc_anomaly(double mean_anom, double e) {
    double m = wrap_two_pi(mean_anom);
    double ea = (e < 0.8) ? m : consts::pi;
    for (int it = 0; it < 60; ++it) {
        double f = ea - e * std::sin(ea) - m;
        double fp = 1.0 - e * std::cos(ea);
        double d = f / fp;
        ea -= d;
        if (std::abs(d) < 1e-14) break;
    }
    return ea;
}

double ecc_to_true_anomaly(double ecc_anom, double e) {
    double se = std::sqrt(1.0 - e * e) * std::sin(ecc_anom);
    double ce = std::cos(ecc_anom) - e;
    return std::atan2(se, ce);
}

double true_to_ecc_anomaly(double true_anom, double e) {
    double se = std::sqrt(1.0 - e * e) * std::sin(true_anom);
    double ce = e + std::cos(true_anom);
    return std::atan2(se, ce);
}

double ecc_to_mean_anomaly(double ecc_anom, double e) {
    return ecc_anom - e * std::sin(ecc_anom);
}

double equinoctial_ecc_longitude(double lambda, double f, double g) {
    double F = lambda;
    for (int it = 0; it < 60; ++it) {
        double fn = F - f * std::sin(F) + g * std::cos(F) - lambda;
        double fp = 1.0 - f * std::cos(F) - g * std::sin(F);
        double d = fn / fp;
        F -= d;
        if (std::abs(d) < 1e-14) break;
    }
    return F;
}

// ------------------------------------------------------------------
// Cartesian <-> MEE
// ------------------------------------------------------------------

ModifiedEquinoctial cart_to_mee(const CartesianState& s) {
    const Vec3& r = s.r;
    const Vec3& v = s.v;
    double rn = r.norm();
    double vn = v.norm();
    if (rn < 1e-12 || vn < 1e-15) fail("SingularGeometry", "zero radius or velocity");

    double energy = 0.5 * vn * vn - mu_earth / rn;
    if (energy >= 0.0) fail("HyperbolicOrbit", "specific energy >= 0");

    Vec3 hv = r.cross(v);
    double hn = hv.norm();
    if (hn < 1e-12) fail("SingularGeometry", "angular momentum ~ 0");
    Vec3 hhat = hv / hn;
    if (1.0 + hhat.z() < 1e-12)
        fail("RetrogradeSingularity", "inclination at the retrograde singularity");

    ModifiedEquinoctial m;
    m.kind = ElementKind::osculating;
    m.frame = s.frame;
    m.epoch = s.epoch;

    m.p = hn * hn / mu_earth;
    // Node elements: h = tan(i/2) cos raan, k = tan(i/2) sin raan.
    m.h = -hhat.y() / (1.0 + hhat.z());
    m.k = hhat.x() / (1.0 + hhat.z());

    Vec3 ef, eg, ew;
    equinoctial_frame(m.k, m.h, ef, eg, ew);  // q1 = k, q2 = h

    Vec3 er = r / rn;
    double cl = er.dot(ef);
    double sl = er.dot(eg);
    m.L = wrap_two_pi(std::atan2(sl, cl));

    // Eccentricity vector in the equinoctial frame.
    Vec3 evec = v.cross(hv) / mu_earth - er;
    m.f = evec.dot(ef);
    m.g = evec.dot(eg);
    return m;
}

CartesianState mee_to_cart(const ModifiedEquinoctial& m) {
    if (m.p <= 0.0) fail("InvalidElements", "p <= 0");
    double w = 1.0 + m.f * std::cos(m.L) + m.g * std::sin(m.L);
    double rn = m.p / w;

    Vec3 ef, eg, ew;
    equinoctial_frame(m.k, m.h, ef, eg, ew);

    double cl = std::cos(m.L), sl = std::sin(m.L);
    Vec3 r = rn * (cl * ef + sl * eg);
    double c = std::sqrt(mu_earth / m.p);
    Vec3 v = c * (-(sl + m.g) * ef + (cl + m.f) * eg);

    CartesianState s;
    s.r = r;
    s.v = v;
    s.frame = m.frame;
    s.epoch = m.epoch;
    return s;
}

// ------------------------------------------------------------------
// COE <-> MEE
// ------------------------------------------------------------------

ModifiedEquinoctial coe_to_mee(const ClassicalElements& e) {
    if (e.i > consts::pi - 1e-6)
        fail("RetrogradeSingularity", "i too close to pi for equinoctial set");
    ModifiedEquinoctial m;
    m.p = e.a * (1.0 - e.e * e.e);
    double w = e.argp + e.raan;
    m.f = e.e * std::cos(w);
    m.g = e.e * std::sin(w);
    double t = std::tan(e.i / 2.0);
    m.h = t * std::cos(e.raan);
    m.k = t * std::sin(e.raan);
    m.L = wrap_two_pi(e.raan + e.argp + e.ta);
    m.kind = e.kind;
    m.frame = e.frame;
    m.epoch = e.epoch;
    return m;
}

ClassicalElements mee_to_coe(const ModifiedEquinoctial& m) {
    ClassicalElements e;
    e.e = std::sqrt(m.f * m.f + m.g * m.g);
    if (e.e >= 1.0) fail("InvalidElements", "e >= 1");
    e.a = m.p / (1.0 - e.e * e.e);
    double t = std::sqrt(m.h * m.h + m.k * m.k);
    e.i = 2.0 * std::atan(t);

    // Conventionalized angles for near-singular geometry.
    double raan = (t < kEquatorialEps) ? 0.0 : std::atan2(m.k, m.h);
    double lonper = (e.e < kCircularEps) ? raan : std::atan2(m.g, m.f);
    e.raan = wrap_two_pi(raan);
    e.argp = wrap_two_pi(lonper - raan);
    e.ta = wrap_two_pi(m.L - lonper);
    e.kind = m.kind;
    e.frame = m.frame;
    e.epoch = m.epoch;
    return e;
}

// ------------------------------------------------------------------
// Cartesian <-> COE (through MEE near the singular cases)
// ------------------------------------------------------------------

ClassicalElements cart_to_coe(const CartesianState& s) {
    // The equinoctial path is regular everywhere we operate, and the
    // COE output applies the quasi-circular/equatorial conventions.
    return mee_to_coe(cart_to_mee(s));
}

CartesianState coe_to_cart(const ClassicalElements& e) {
    if (e.kind != ElementKind::osculating)
        fail("InvalidElements", "coe_to_cart expects osculating elements");
    if (e.a <= 0.0 || e.e >= 1.0) fail("InvalidElements", "need a > 0 and e < 1");
    return mee_to_cart(coe_to_mee(e));
}

// ------------------------------------------------------------------
// GEqOE
// ------------------------------------------------------------------

GEqOE cart_to_geqoe(const CartesianState& s, bool include_j2) {
    const Vec3& r = s.r;
    const Vec3& v = s.v;
    double rn = r.norm();
    double vn = v.norm();
    if (rn < 1e-12) fail("SingularGeometry", "zero radius");

    double pot = include_j2 ? j2_potential(r) : 0.0;
    double energy = 0.5 * vn * vn - mu_earth / rn + pot;
    if (energy >= 0.0) fail("HyperbolicOrbit", "generalized energy >= 0");

    GEqOE g;
    g.kind = ElementKind::osculating;
    g.frame = s.frame;
    g.epoch = s.epoch;
    g.nu = std::pow(-2.0 * energy, 1.5) / mu_earth;

    Vec3 hv = r.cross(v);
    double hn = hv.norm();
    Vec3 hhat = hv / hn;
    if (1.0 + hhat.z() < 1e-12)
        fail("RetrogradeSingularity", "inclination at the retrograde singularity");
    g.q1 = hhat.x() / (1.0 + hhat.z());
    g.q2 = -hhat.y() / (1.0 + hhat.z());

    // Generalized angular momentum.
    double c2 = hn * hn + 2.0 * rn * rn * pot;
    if (c2 <= 0.0) fail("SingularGeometry", "generalized angular momentum imaginary");
    double c = std::sqrt(c2);

    double rdot = r.dot(v) / rn;
    double A = c2 / (mu_earth * rn) - 1.0;   // g cos(theta~)
    double B = c * rdot / mu_earth;          // g sin(theta~)

    Vec3 ef, eg, ew;
    equinoctial_frame(g.q1, g.q2, ef, eg, ew);
    Vec3 er = r / rn;
    double cl = er.dot(ef);
    double sl = er.dot(eg);

    g.p1 = A * sl - B * cl;
    g.p2 = A * cl + B * sl;

    // Generalized eccentric longitude via the linear system that inverts
    // the in-plane position formulas; regular for any g < 1.
    double a = std::cbrt(mu_earth / (g.nu * g.nu));
    double g2 = g.p1 * g.p1 + g.p2 * g.p2;
    if (g2 >= 1.0) fail("InvalidElements", "generalized eccentricity >= 1");
    double eta = std::sqrt(1.0 - g2);
    double beta = 1.0 / (1.0 + eta);
    double X = rn * cl, Y = rn * sl;
    double rx = X / a + g.p2;
    double ry = Y / a + g.p1;
    double cK = ((1.0 - g.p2 * g.p2 * beta) * rx - g.p1 * g.p2 * beta * ry) / eta;
    double sK = (-g.p1 * g.p2 * beta * rx + (1.0 - g.p1 * g.p1 * beta) * ry) / eta;
    double K = std::atan2(sK, cK);

    g.lon = wrap_two_pi(K + g.p1 * std::cos(K) - g.p2 * std::sin(K));
    return g;
}

CartesianState geqoe_to_cart(const GEqOE& g, bool include_j2) {
    double g2 = g.p1 * g.p1 + g.p2 * g.p2;
    if (g2 >= 1.0) fail("InvalidElements", "generalized eccentricity >= 1");
    if (g.nu <= 0.0) fail("InvalidElements", "nu <= 0");

    // Generalized Kepler equation.
    double K = g.lon;
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
        double fn = K + g.p1 * std::cos(K) - g.p2 * std::sin(K) - g.lon;
        double fp = 1.0 - g.p1 * std::sin(K) - g.p2 * std::cos(K);
        double d = fn / fp;
        K -= d;
        if (std::abs(d) < 1e-14) { converged = true; break; }
    }
    if (!converged) fail("ConversionDiverged", "generalized Kepler solve failed");

    double a = std::cbrt(mu_earth / (g.nu * g.nu));
    double eta = std::sqrt(1.0 - g2);
    double beta = 1.0 / (1.0 + eta);
    double sK = std::sin(K), cK = std::cos(K);
    double rn = a * (1.0 - g.p1 * sK - g.p2 * cK);

    double X = a * ((1.0 - g.p1 * g.p1 * beta) * cK + g.p1 * g.p2 * beta * sK - g.p2);
    double Y = a * ((1.0 - g.p2 * g.p2 * beta) * sK + g.p1 * g.p2 * beta * cK - g.p1);

    Vec3 ef, eg, ew;
    equinoctial_frame(g.q1, g.q2, ef, eg, ew);
    Vec3 r = X * ef + Y * eg;

    double rdot = std::sqrt(mu_earth * a) / rn * (g.p2 * sK - g.p1 * cK);
    double c = std::sqrt(mu_earth * a * (1.0 - g2));
    double pot = include_j2 ? j2_potential(r) : 0.0;
    double h2 = c * c - 2.0 * rn * rn * pot;
    if (h2 <= 0.0) fail("SingularGeometry", "true angular momentum imaginary");
    double h = std::sqrt(h2);

    Vec3 er = r / rn;
    Vec3 et = ew.cross(er);
    Vec3 v = rdot * er + (h / rn) * et;

    CartesianState s;
    s.r = r;
    s.v = v;
    s.frame = g.frame;
    s.epoch = g.epoch;
    return s;
}

} // namespace adrg
