#ifndef ADRG_FRAMES_HPP
#define ADRG_FRAMES_HPP

#include "adrg/core.hpp"

namespace adrg {

/**
 * Frame rotations between the J2000 mean-equator/mean-equinox frame and
 * the true-of-date (TOD) frame.
 *
 * Model: IAU-76 precession angles plus the four largest-amplitude terms
 * of the IAU-1980 nutation series. Good to well under an arcminute at
 * LEO mission horizons; polar motion and UT1 are out of scope.
 */

// Rotation matrix taking J2000 vectors to TOD vectors at the given epoch.
Mat3 j2000_to_tod_matrix(const Epoch& epoch);

CartesianState tod_to_j2000(const CartesianState& s);
CartesianState j2000_to_tod(const CartesianState& s);

// Columns are the radial, transverse and normal unit vectors, so the
// matrix maps RTN components into the state's own frame.
Mat3 rtn_basis(const CartesianState& s);
Mat3 rtn_basis(const Vec3& r, const Vec3& v);

} // namespace adrg

#endif
