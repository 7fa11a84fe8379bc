#include "vascrew/kinematics.hpp"

#include <cmath>
#include <string>

#include "vascrew/errors.hpp"

namespace vascrew {

AngleOfAttack angle_from_length(const ScrewGeometry& geometry, double d_mm) {
    geometry.validate();
    const double ratio = (d_mm - geometry.plate_offset_d0_mm) / geometry.strut_length_l_mm;
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw DomainError("plate distance " + std::to_string(d_mm) +
                          " mm outside actuator domain [d0, d0 + l)");
    return AngleOfAttack(std::asin(ratio) * 180.0 / M_PI);
}

double length_from_angle(const ScrewGeometry& geometry, const AngleOfAttack& theta) {
    geometry.validate();
    return geometry.plate_offset_d0_mm + geometry.strut_length_l_mm * std::sin(theta.radians());
}

double lead_per_revolution(const AngleOfAttack& theta, double effective_radius_mm) {
    if (!(effective_radius_mm > 0.0))
        throw DomainError("effective radius must be > 0 mm");
    return 2.0 * M_PI * effective_radius_mm * std::tan(theta.radians());
}

double no_slip_velocity(const AngleOfAttack& theta, double effective_radius_mm,
                        double omega_rad_s) {
    if (!(omega_rad_s >= 0.0))
        throw DomainError("angular velocity must be >= 0 rad/s");
    if (!(effective_radius_mm > 0.0))
        throw DomainError("effective radius must be > 0 mm");
    return omega_rad_s * (effective_radius_mm / 1000.0) * std::tan(theta.radians());
}

}  // namespace vascrew
