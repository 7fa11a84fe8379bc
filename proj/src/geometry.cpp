#include "vascrew/geometry.hpp"

#include <cmath>
#include <sstream>

#include "vascrew/errors.hpp"

namespace vascrew {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

void ScrewGeometry::validate() const {
    std::ostringstream why;
    if (!(root_radius_mm > 0.0 && root_radius_mm < outer_radius_mm))
        why << "require 0 < root_radius (" << root_radius_mm << ") < outer_radius (" << outer_radius_mm << "); ";
    if (!(plate_offset_d0_mm > 0.0))
        why << "plate_offset_d0_mm must be > 0; ";
    if (!(strut_length_l_mm > 0.0))
        why << "strut_length_l_mm must be > 0; ";
    if (!(plate_offset_d0_mm <= min_length_mm && min_length_mm < max_length_mm &&
          max_length_mm <= plate_offset_d0_mm + strut_length_l_mm))
        why << "require d0 <= min_length < max_length <= d0 + l; ";
    if (thread_starts < 1)
        why << "thread_starts must be >= 1; ";
    const std::string msg = why.str();
    if (!msg.empty()) throw DomainError("invalid screw geometry: " + msg);
}

AngleOfAttack::AngleOfAttack(double degrees) : degrees_(degrees) {
    if (!(degrees >= 0.0 && degrees < 90.0))
        throw DomainError("angle of attack " + std::to_string(degrees) +
                          " deg outside mathematical domain [0, 90)");
}

double AngleOfAttack::radians() const { return degrees_ * kDegToRad; }

}  // namespace vascrew
