#ifndef ADRG_EPHEMERIS_HPP
#define ADRG_EPHEMERIS_HPP

#include "adrg/core.hpp"

namespace adrg {

// Low-precision analytic Sun position, geocentric, mean-of-date
// equator/equinox (used interchangeably with TOD at this accuracy). km.
Vec3 sun_position(const Epoch& epoch);

// Low-precision analytic Moon position, geocentric. km.
Vec3 moon_position(const Epoch& epoch);

// True when the point r (geocentric km) sits inside the cylindrical
// Earth shadow for the given sun direction.
bool in_cylindrical_shadow(const Vec3& r, const Vec3& sun_dir);

} // namespace adrg

#endif
