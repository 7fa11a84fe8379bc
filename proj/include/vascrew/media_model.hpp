#pragma once

#include <string>
#include <vector>

#include "vascrew/geometry.hpp"

namespace vascrew {

/// Fitted screw/media interaction coefficients.
///
/// Slip is linear in the angle, s(theta) = clamp(slip_base +
/// slip_slope*theta_deg, 0, 1); thrust scales with cos(theta) and the grip
/// fraction (1-s); resistive torque is affine in the angle. The lowest-order
/// forms that reproduce the observed trends (forward speed rising, efficiency
/// falling with angle) and reduce to ideal screw kinematics at zero slip.
struct MediaParams {
    std::string name;
    double slip_base = 0.0;           // s_a, dimensionless, in [0, 1]
    double slip_slope_per_deg = 0.0;  // s_b >= 0
    double thrust_scale_N = 0.0;      // f_0 >= 0
    double torque_base_Nm = 0.0;      // c_0 >= 0
    double torque_slope_Nm_per_deg = 0.0;  // c_1 >= 0

    /// Slip fraction at an angle, clamped into [0, 1].
    double slip(const AngleOfAttack& theta) const;

    void validate() const;
};

/// One (angle, speed) operating point with its measured outcomes, the unit a
/// fit consumes. Requires omega > 0 and an operationally valid angle.
struct Observation {
    AngleOfAttack angle{AngleOfAttack::kMinOperationalDeg};
    double omega_rad_s = 0.0;
    double v_measured_m_s = 0.0;
    double efficiency_measured = 0.0;
};

/// Forward speed: no-slip advance reduced by the slip fraction,
/// omega * r * tan(theta) * (1 - s(theta)). Never exceeds the no-slip value.
double predict_velocity(const MediaParams& media, double effective_radius_mm,
                        const AngleOfAttack& theta, double omega_rad_s);

/// Thrust: f_0 * cos(theta) * (1 - s(theta)). Decreasing in the angle.
double predict_thrust(const MediaParams& media, const AngleOfAttack& theta);

/// Resistive torque: c_0 + c_1 * theta_deg.
double predict_torque(const MediaParams& media, const AngleOfAttack& theta);

/// Efficiency of the modeled media: predicted thrust * velocity / (torque *
/// omega). Requires omega > 0; throws DataError when the predicted torque is
/// not positive (degenerate parameters).
double predict_efficiency(const MediaParams& media, double effective_radius_mm,
                          const AngleOfAttack& theta, double omega_rad_s);

struct FitDiagnostics {
    double rmse_velocity = 0.0;
    double rmse_efficiency = 0.0;
    int iterations = 0;
    bool converged = false;
    double objective_initial = 0.0;
    double objective_final = 0.0;
};

struct FitResult {
    MediaParams params;
    FitDiagnostics diagnostics;
};

/// Fits the five free coefficients to measured (velocity, efficiency) pairs
/// by Nelder-Mead on the sum of squared residuals, each channel normalized
/// by its largest measured magnitude (falling back to 1 for an all-zero
/// channel). Deterministic: the initial simplex is derived from the data.
///
/// Needs at least 4 observations spanning at least 3 distinct angles.
///
/// Note on scale: (velocity, efficiency) data determine thrust_scale_N,
/// torque_base_Nm and torque_slope_Nm_per_deg only up to a common positive
/// factor (efficiency depends on thrust/torque alone). Returned parameters
/// are normalized to the canonical gauge torque(22.5 deg) = 1 N*m; velocity,
/// slip and efficiency predictions are unaffected by this choice.
FitResult fit_media(const std::vector<Observation>& observations, double effective_radius_mm,
                    const std::string& media_name);

}  // namespace vascrew
