#pragma once

#include "vascrew/geometry.hpp"

namespace vascrew {

/// Blade angle reached when the inner plate distance is d_mm:
/// theta = asin((d - d0) / l). Strictly increasing in d.
/// Throws DomainError when (d - d0)/l is outside [0, 1) -- the ratio 1 would
/// put the angle at 90 deg, outside the angle domain.
AngleOfAttack angle_from_length(const ScrewGeometry& geometry, double d_mm);

/// Inverse of angle_from_length: d = d0 + l*sin(theta).
double length_from_angle(const ScrewGeometry& geometry, const AngleOfAttack& theta);

/// Axial distance advanced per full revolution under zero slip:
/// 2*pi*r*tan(theta), in mm/rev. Requires effective_radius_mm > 0.
double lead_per_revolution(const AngleOfAttack& theta, double effective_radius_mm);

/// Ideal (zero-slip) forward speed in m/s for spin rate omega_rad_s:
/// omega * r * tan(theta), with r converted mm -> m. Requires omega >= 0.
double no_slip_velocity(const AngleOfAttack& theta, double effective_radius_mm,
                        double omega_rad_s);

}  // namespace vascrew
