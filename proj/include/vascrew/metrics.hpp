#pragma once

#include <array>
#include <string>
#include <vector>

#include "vascrew/geometry.hpp"
#include "vascrew/trial_log.hpp"

namespace vascrew {

/// Per-trial locomotion summary. efficiency is always
/// f_thrust_max * v_avg / (tau_avg * omega_avg) by construction.
struct TrialMetrics {
    double v_avg_m_s = 0.0;
    double f_thrust_max_N = 0.0;
    double tau_avg_Nm = 0.0;
    double omega_avg_rad_s = 0.0;
    double efficiency = 0.0;
    std::string media_name;
    AngleOfAttack commanded_angle{0.0};
};

/// Worst-case structural design load: component-wise peak force with the
/// tared-out weight restored on the down axis.
struct LoadEnvelope {
    std::array<double, 3> applied_force_xyz_N{};
    double magnitude_N = 0.0;
    double effective_mass_kg = 0.0;
};

/// One processed trial as it appears in the metrics table: identity, summary
/// metrics and the per-axis force peaks the load envelope needs.
struct TrialRecord {
    std::string trial_id;
    TrialMetrics metrics;
    std::array<double, 3> peak_force_N{};
};

/// Ratio of propulsive power to input mechanical power:
/// (f_thrust * v) / (tau_in * omega). Requires omega > 0 and tau_in != 0;
/// throws DataError otherwise (invalid trial). Negative values are
/// meaningful (net braking / backward force) and are not clamped.
double locomotive_efficiency(double f_thrust_N, double v_m_s, double tau_in_Nm,
                             double omega_rad_s);

/// Summarizes a steady-state (clipped) log:
///   v_avg       displacement / duration of the carriage,
///   f_thrust    max of the +Z (forward) force channel,
///   tau, omega  means of the screw-axis torque and angular velocity.
/// Feed it the filtered log so a single-sample spike cannot set the max.
/// Requires the position channel; throws DataError when omega_avg <= 0.
/// A log driven backward yields a negative v_avg (and efficiency), reported
/// as-is.
TrialMetrics trial_metrics(const TrialLog& clipped);

/// Per-axis force peak of a log: the sample of largest magnitude on each
/// axis, sign retained. Input to load_envelope.
std::array<double, 3> peak_forces(const TrialLog& log);

/// Component-wise worst case over per-trial peak vectors (largest magnitude
/// wins, sign retained), weight restored on X via gravity_augment, magnitude
/// = Euclidean norm of the result.
LoadEnvelope load_envelope(const std::vector<std::array<double, 3>>& trial_peaks,
                           double effective_mass_kg);

}  // namespace vascrew
