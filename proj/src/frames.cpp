#include "adrg/frames.hpp"

namespace adrg {

namespace {

constexpr double arcsec = consts::deg2rad / 3600.0;

Mat3 rot1(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << 1, 0, 0,
         0, c, s,
         0, -s, c;
    return m;
}

Mat3 rot2(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << c, 0, -s,
         0, 1, 0,
         s, 0, c;
    return m;
}

Mat3 rot3(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << c, s, 0,
         -s, c, 0,
         0, 0, 1;
    return m;
}

// IAU-76 precession, J2000 -> mean of date.
Mat3 precession_matrix(double T) {
    double zeta  = (2306.2181 * T + 0.30188 * T * T + 0.017998 * T * T * T) * arcsec;
    double z     = (2306.2181 * T + 1.09468 * T * T + 0.018203 * T * T * T) * arcsec;
    double theta = (2004.3109 * T - 0.42665 * T * T - 0.041833 * T * T * T) * arcsec;
    return rot3(-z) * rot2(theta) * rot3(-zeta);
}

struct Nutation {
    double dpsi;  // nutation in longitude, rad
    double deps;  // nutation in obliquity, rad
    double eps0;  // mean obliquity, rad
};

// Four largest-amplitude terms of the 1980 nutation series.
Nutation nutation_angles(double T) {
    auto d = consts::deg2rad;
    // Delaunay arguments (degrees -> rad).
    double om = (125.04452222 - 1934.13626197 * T + 0.00207083 * T * T) * d;
    double f  = (93.27191028 + 483202.01753 * T - 0.00368250 * T * T) * d;
    double dd = (297.85036306 + 445267.11148 * T - 0.00191417 * T * T) * d;

    struct Term { double arg, sp, spt, ce, cet; };
    const Term terms[4] = {
        { om,                      -171996.0, -174.2, 92025.0,  8.9 },
        { 2.0 * (f - dd + om),      -13187.0,   -1.6,  5736.0, -3.1 },
        { 2.0 * (f + om),            -2274.0,   -0.2,   977.0, -0.5 },
        { 2.0 * om,                   2062.0,    0.2,  -895.0,  0.5 },
    };

    double dpsi = 0.0, deps = 0.0;
    for (const auto& t : terms) {
        dpsi += (t.sp + t.spt * T) * std::sin(t.arg);
        deps += (t.ce + t.cet * T) * std::cos(t.arg);
    }
    // Coefficients are in units of 0.1 mas.
    dpsi *= 1e-4 * arcsec;
    deps *= 1e-4 * arcsec;

    double eps0 = (84381.448 - 46.8150 * T - 0.00059 * T * T
                   + 0.001813 * T * T * T) * arcsec;
    return {dpsi, deps, eps0};
}

} // namespace

Mat3 j2000_to_tod_matrix(const Epoch& epoch) {
    double T = epoch.julian_centuries();
    Mat3 p = precession_matrix(T);
    Nutation n = nutation_angles(T);
    Mat3 nut = rot1(-(n.eps0 + n.deps)) * rot3(-n.dpsi) * rot1(n.eps0);
    return nut * p;
}

CartesianState j2000_to_tod(const CartesianState& s) {
    if (s.frame != Frame::J2000) fail("FrameMismatch", "expected J2000 input state");
    Mat3 m = j2000_to_tod_matrix(s.epoch);
    CartesianState out;
    out.r = m * s.r;
    out.v = m * s.v;
    out.frame = Frame::TOD;
    out.epoch = s.epoch;
    return out;
}

CartesianState tod_to_j2000(const CartesianState& s) {
    if (s.frame != Frame::TOD) fail("FrameMismatch", "expected TOD input state");
    Mat3 m = j2000_to_tod_matrix(s.epoch);
    CartesianState out;
    out.r = m.transpose() * s.r;
    out.v = m.transpose() * s.v;
    out.frame = Frame::J2000;
    out.epoch = s.epoch;
    return out;
}

Mat3 rtn_basis(const Vec3& r, const Vec3& v) {
    Vec3 h = r.cross(v);
    if (r.norm() < 1e-12 || h.norm() < 1e-12)
        fail("DegenerateGeometry", "r and v parallel or zero");
    Vec3 er = r.normalized();
    Vec3 en = h.normalized();
    Vec3 et = en.cross(er);
    Mat3 m;
    m.col(0) = er;
    m.col(1) = et;
    m.col(2) = en;
    return m;
}

Mat3 rtn_basis(const CartesianState& s) { return rtn_basis(s.r, s.v); }

Epoch epoch_from_calendar(int year, int month, int day,
                          int hour, int minute, double second) {
    // Fliegel - Van Flandern, valid for Gregorian dates.
    long jdn = (1461L * (year + 4800L + (month - 14) / 12)) / 4
             + (367L * (month - 2 - 12 * ((month - 14) / 12))) / 12
             - (3L * ((year + 4900L + (month - 14) / 12) / 100)) / 4
             + day - 32075L;
    // jdn is the Julian day number at noon of the civil date.
    double days_from_j2000 = static_cast<double>(jdn) - 2451545.0;
    double sec = days_from_j2000 * consts::sec_per_day
               + (hour - 12) * 3600.0 + minute * 60.0 + second;
    return Epoch(sec);
}

} // namespace adrg
