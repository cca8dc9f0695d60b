#ifndef ADRG_CORE_HPP
#define ADRG_CORE_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adrg/constants.hpp"

namespace adrg {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat63 = Eigen::Matrix<double, 6, 3>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

// ------------------------------------------------------------------
// Errors
// ------------------------------------------------------------------

// Domain error with a stable symbolic code, e.g. "HyperbolicOrbit".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

// ------------------------------------------------------------------
// Angles
// ------------------------------------------------------------------

// Wrap to [0, 2*pi).
inline double wrap_two_pi(double x) {
    double w = std::fmod(x, consts::two_pi);
    if (w < 0.0) w += consts::two_pi;
    return w;
}

// Wrap to (-pi, pi].
inline double wrap_pi(double x) {
    double w = std::fmod(x, consts::two_pi);
    if (w > consts::pi) w -= consts::two_pi;
    if (w <= -consts::pi) w += consts::two_pi;
    return w;
}

inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// ------------------------------------------------------------------
// Time
// ------------------------------------------------------------------

// Terrestrial Time seconds since J2000.0 (2000-01-01 12:00:00 TT).
struct Epoch {
    double tt_seconds_since_j2000 = 0.0;

    Epoch() = default;
    explicit Epoch(double tt_s) : tt_seconds_since_j2000(tt_s) {}

    double julian_centuries() const {
        return tt_seconds_since_j2000 / (consts::sec_per_day * 36525.0);
    }

    Epoch operator+(double dt_s) const { return Epoch(tt_seconds_since_j2000 + dt_s); }
    double operator-(const Epoch& other) const {
        return tt_seconds_since_j2000 - other.tt_seconds_since_j2000;
    }
    bool operator<(const Epoch& o) const {
        return tt_seconds_since_j2000 < o.tt_seconds_since_j2000;
    }
};

// Calendar date/time (interpreted directly as TT) to Epoch.
// Uses the Fliegel - Van Flandern Julian day algorithm.
Epoch epoch_from_calendar(int year, int month, int day,
                          int hour = 0, int minute = 0, double second = 0.0);

// ------------------------------------------------------------------
// Frames
// ------------------------------------------------------------------

enum class Frame { TOD, J2000 };

// Osculating cartesian state: the propagation currency.
struct CartesianState {
    Vec3 r = Vec3::Zero();   // km
    Vec3 v = Vec3::Zero();   // km/s
    Frame frame = Frame::TOD;
    Epoch epoch;
};

} // namespace adrg

#endif
