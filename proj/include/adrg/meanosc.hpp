#ifndef ADRG_MEANOSC_HPP
#define ADRG_MEANOSC_HPP

#include "adrg/elements.hpp"

namespace adrg {

/**
 * First-order J2 mean <-> osculating element mapping.
 *
 * The short-period offset of each equinoctial element is the zero-mean
 * oscillating part of the Gauss rates integrated along the frozen orbit,
 * evaluated spectrally on a uniform mean-longitude grid. mean -> osc adds
 * the offset; osc -> mean inverts it by fixed-point iteration, so the
 * round trip closes to iteration tolerance rather than to first order.
 *
 * Valid for e < 0.1 (TheoryOutOfRange beyond). With j2 = 0 both maps are
 * the exact identity.
 */

ModifiedEquinoctial mean_to_osc(const ModifiedEquinoctial& mean,
                                double j2 = consts::j2);
ModifiedEquinoctial osc_to_mean(const ModifiedEquinoctial& osc,
                                double j2 = consts::j2);

ClassicalElements mean_to_osc(const ClassicalElements& mean,
                              double j2 = consts::j2);
ClassicalElements osc_to_mean(const ClassicalElements& osc,
                              double j2 = consts::j2);

// Mean classical elements of an osculating cartesian state.
ClassicalElements cart_to_mean_coe(const CartesianState& s,
                                   double j2 = consts::j2);

// Secular J2 rates of mean elements: raan, argp and mean-anomaly rates.
struct SecularRates {
    double raan_dot = 0.0;   // rad/s
    double argp_dot = 0.0;   // rad/s
    double mean_anomaly_dot = 0.0;  // rad/s, includes the Keplerian n
};
SecularRates j2_secular_rates(const ClassicalElements& mean);

// Advance mean elements by dt under J2 secular drift only.
ClassicalElements propagate_mean_secular(const ClassicalElements& mean, double dt);

} // namespace adrg

#endif
