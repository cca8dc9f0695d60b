#include "adrg/meanosc.hpp"

#include <array>

#include "adrg/forces.hpp"

namespace adrg {

using consts::mu_earth;

namespace {

constexpr int kGrid = 32;       // uniform mean-longitude samples per orbit
constexpr int kHarmonics = 15;  // retained Fourier harmonics

struct Mee6 {
    // (p, f, g, h, k, lambda) with lambda the mean longitude
    std::array<double, 6> x{};
};

Mee6 pack(const ModifiedEquinoctial& m) {
    // Convert true longitude to mean longitude.
    double lonper = std::atan2(m.g, m.f);
    double e = m.ecc();
    double ta = m.L - lonper;
    double ea = true_to_ecc_anomaly(ta, e);
    double ma = ecc_to_mean_anomaly(ea, e);
    Mee6 out;
    out.x = {m.p, m.f, m.g, m.h, m.k, wrap_two_pi(ma + lonper)};
    return out;
}

ModifiedEquinoctial unpack(const Mee6& v, const ModifiedEquinoctial& like) {
    ModifiedEquinoctial m = like;
    m.p = v.x[0];
    m.f = v.x[1];
    m.g = v.x[2];
    m.h = v.x[3];
    m.k = v.x[4];
    double lonper = std::atan2(m.g, m.f);
    double e = m.ecc();
    double ma = v.x[5] - lonper;
    double ea = mean_to_ecc_anomaly(ma, e);
    double ta = ecc_to_true_anomaly(ea, e);
    m.L = wrap_two_pi(ta + lonper);
    return m;
}

// Gauss rates of (p, f, g, h, k, lambda - n t) under J2 at mean longitude
// lambda on the frozen ellipse.
std::array<double, 6> gauss_rates(const Mee6& el, double lambda, double j2) {
    double p = el.x[0], f = el.x[1], g = el.x[2], h = el.x[3], k = el.x[4];
    double F = equinoctial_ecc_longitude(lambda, f, g);
    // True longitude from eccentric longitude.
    double e2 = f * f + g * g;
    double eta = std::sqrt(1.0 - e2);
    double beta = 1.0 / (1.0 + eta);
    double a = p / (1.0 - e2);
    double cF = std::cos(F), sF = std::sin(F);
    double rn = a * (1.0 - f * cF - g * sF);
    double X = a * ((1.0 - g * g * beta) * cF + f * g * beta * sF - f);
    double Y = a * ((1.0 - f * f * beta) * sF + f * g * beta * cF - g);
    double cL = X / rn, sL = Y / rn;

    // Build the cartesian state on the frozen ellipse.
    ModifiedEquinoctial m;
    m.p = p; m.f = f; m.g = g; m.h = h; m.k = k;
    m.L = std::atan2(sL, cL);
    CartesianState s = mee_to_cart(m);

    Vec3 acc = accel_j2_with(s.r, j2);
    Vec3 hv = s.r.cross(s.v);
    Vec3 er = s.r.normalized();
    Vec3 en = hv.normalized();
    Vec3 et = en.cross(er);
    double fr = acc.dot(er), ft = acc.dot(et), fn = acc.dot(en);

    double w = 1.0 + f * cL + g * sL;
    double s2 = 1.0 + h * h + k * k;
    double spmu = std::sqrt(p / mu_earth);
    double hk = h * sL - k * cL;

    std::array<double, 6> d{};
    d[0] = 2.0 * p / w * spmu * ft;
    d[1] = spmu * (sL * fr + (((w + 1.0) * cL + f) / w) * ft - (g / w) * hk * fn);
    d[2] = spmu * (-cL * fr + (((w + 1.0) * sL + g) / w) * ft + (f / w) * hk * fn);
    d[3] = spmu * s2 * cL / (2.0 * w) * fn;
    d[4] = spmu * s2 * sL / (2.0 * w) * fn;
    // Mean-longitude rate excess over n (regular for e -> 0).
    d[5] = -2.0 * rn / std::sqrt(mu_earth * p) * fr + spmu / w * hk * fn;
    return d;
}

// Zero-mean short-period offsets at the element set's own phase.
std::array<double, 6> short_period_offset(const Mee6& el, double j2) {
    if (j2 == 0.0) return {};
    double e2 = el.x[1] * el.x[1] + el.x[2] * el.x[2];
    double a = el.x[0] / (1.0 - e2);
    double n = std::sqrt(mu_earth / (a * a * a));

    // Rates sampled on a uniform grid anchored at the input longitude.
    std::array<std::array<double, 6>, kGrid> rates;
    for (int j = 0; j < kGrid; ++j) {
        double lam = el.x[5] + consts::two_pi * j / kGrid;
        rates[j] = gauss_rates(el, lam, j2);
    }

    // delta = -(1/n) sum_k b_k / k at the grid anchor, where b_k are the
    // sine Fourier coefficients of the rate series.
    std::array<double, 6> delta{};
    for (int kh = 1; kh <= kHarmonics; ++kh) {
        std::array<double, 6> bk{};
        for (int j = 0; j < kGrid; ++j) {
            double sjk = std::sin(consts::two_pi * j * kh / kGrid);
            for (int c = 0; c < 6; ++c) bk[c] += rates[j][c] * sjk;
        }
        for (int c = 0; c < 6; ++c) delta[c] -= (2.0 / kGrid) * bk[c] / (kh * n);
    }
    return delta;
}

void check_domain(const ModifiedEquinoctial& m) {
    if (m.ecc() >= 0.1)
        fail("TheoryOutOfRange", "mean/osculating theory limited to e < 0.1");
}

} // namespace

ModifiedEquinoctial mean_to_osc(const ModifiedEquinoctial& mean, double j2) {
    if (mean.kind != ElementKind::mean)
        fail("InvalidElements", "mean_to_osc expects mean elements");
    check_domain(mean);
    Mee6 el = pack(mean);
    auto d = short_period_offset(el, j2);
    Mee6 osc = el;
    for (int c = 0; c < 6; ++c) osc.x[c] += d[c];
    ModifiedEquinoctial out = unpack(osc, mean);
    out.kind = ElementKind::osculating;
    return out;
}

ModifiedEquinoctial osc_to_mean(const ModifiedEquinoctial& osc, double j2) {
    if (osc.kind != ElementKind::osculating)
        fail("InvalidElements", "osc_to_mean expects osculating elements");
    check_domain(osc);
    Mee6 target = pack(osc);
    Mee6 mean = target;
    for (int it = 0; it < 12; ++it) {
        auto d = short_period_offset(mean, j2);
        double step = 0.0;
        for (int c = 0; c < 6; ++c) {
            double next = target.x[c] - d[c];
            step = std::max(step, std::abs(next - mean.x[c])
                                  / std::max(1.0, std::abs(next)));
            mean.x[c] = next;
        }
        if (step < 1e-13) break;
    }
    ModifiedEquinoctial out = unpack(mean, osc);
    out.kind = ElementKind::mean;
    return out;
}

ClassicalElements mean_to_osc(const ClassicalElements& mean, double j2) {
    ModifiedEquinoctial m = coe_to_mee(mean);
    return mee_to_coe(mean_to_osc(m, j2));
}

ClassicalElements osc_to_mean(const ClassicalElements& osc, double j2) {
    ModifiedEquinoctial m = coe_to_mee(osc);
    return mee_to_coe(osc_to_mean(m, j2));
}

ClassicalElements cart_to_mean_coe(const CartesianState& s, double j2) {
    ModifiedEquinoctial m = cart_to_mee(s);
    return mee_to_coe(osc_to_mean(m, j2));
}

SecularRates j2_secular_rates(const ClassicalElements& mean) {
    double a = mean.a, e = mean.e, i = mean.i;
    double n = std::sqrt(mu_earth / (a * a * a));
    double p = a * (1.0 - e * e);
    double fac = 1.5 * consts::j2 * n
               * (consts::r_earth / p) * (consts::r_earth / p);
    double ci = std::cos(i);
    SecularRates r;
    r.raan_dot = -fac * ci;
    r.argp_dot = 0.5 * fac * (5.0 * ci * ci - 1.0);
    r.mean_anomaly_dot = n + 0.5 * fac * std::sqrt(1.0 - e * e)
                             * (3.0 * ci * ci - 1.0);
    return r;
}

ClassicalElements propagate_mean_secular(const ClassicalElements& mean, double dt) {
    SecularRates rates = j2_secular_rates(mean);
    ClassicalElements out = mean;
    double ea0 = true_to_ecc_anomaly(mean.ta, mean.e);
    double ma0 = ecc_to_mean_anomaly(ea0, mean.e);
    double ma = ma0 + rates.mean_anomaly_dot * dt;
    out.raan = wrap_two_pi(mean.raan + rates.raan_dot * dt);
    out.argp = wrap_two_pi(mean.argp + rates.argp_dot * dt);
    out.ta = wrap_two_pi(ecc_to_true_anomaly(mean_to_ecc_anomaly(ma, mean.e), mean.e));
    out.epoch = mean.epoch + dt;
    return out;
}

} // namespace adrg
