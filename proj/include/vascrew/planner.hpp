#pragma once

#include <vector>

#include "vascrew/geometry.hpp"
#include "vascrew/media_model.hpp"

namespace vascrew {

/// Scalarization weight between the two goals: 1 = pure velocity,
/// 0 = pure efficiency.
struct Objective {
    double velocity_weight = 0.5;

    void validate() const;  // throws DomainError unless weight in [0, 1]
};

struct ParetoPoint {
    double angle_deg = 0.0;
    double velocity_m_s = 0.0;
    double efficiency = 0.0;
};

/// Velocity/efficiency frontier over the commandable range [10, 35] deg.
/// Evaluates both predictors on the grid (both endpoints included), drops
/// dominated points and exact duplicates (keeping the lowest angle), and
/// returns the rest sorted by angle. Requires 0 < grid_step <= 5 deg.
std::vector<ParetoPoint> pareto_front(const MediaParams& media, double effective_radius_mm,
                                      double omega_rad_s, double grid_step_deg);

struct AnglePlan {
    double angle_deg = 0.0;
    double velocity_m_s = 0.0;
    double efficiency = 0.0;
};

/// Best commandable angle for the weighted objective
///   w * v(theta)/v_max + (1-w) * eta(theta)/eta_max
/// with each channel normalized by its own maximum over [10, 35] deg (a
/// channel whose maximum is <= 0 contributes nothing). 0.5 deg scan plus
/// golden-section refinement of the winning bracket to 0.01 deg; exact ties
/// resolve to the lower angle.
AnglePlan choose_angle(const MediaParams& media, double effective_radius_mm, double omega_rad_s,
                       const Objective& objective);

struct ActuatorCommand {
    double length_mm = 0.0;
    bool clamped = false;
};

/// Actuator length that commands the angle, clamped into the hardware's
/// [min_length, max_length] travel. Clamping is reported, not fatal.
/// The angle must be operationally valid.
ActuatorCommand angle_to_actuator_length(const AngleOfAttack& theta, const ScrewGeometry& geometry);

}  // namespace vascrew
