#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vascrew/trial_log.hpp"

namespace vascrew {

/// Subtracts the set_down baseline sample-wise from the six force/torque
/// channels so the log holds differential measurements. free_hanging is a
/// drift diagnostic only (see baseline_drift) and is never applied.
TrialLog tare(const TrialLog& log, const BaselinePair& baseline);

/// Zero-phase low-pass: second-order Butterworth run forward then backward
/// over every force, torque and angular-velocity channel. DC gain is exactly
/// 1; carriage position is left untouched. Requires 0 < cutoff < fs/2.
TrialLog lowpass(const TrialLog& log, double cutoff_hz);

/// Single-channel forward-backward Butterworth, exposed for tests and
/// bindings. Edges are padded by odd reflection over one settling length and
/// the filter state starts at its step steady state, so constants pass
/// through bit-for-bit up to rounding.
std::vector<double> butterworth_filtfilt(const std::vector<double>& x, double sample_rate_hz,
                                         double cutoff_hz);

/// Steady-state detection: [first, last] samples where the screw angular
/// velocity is at or above 90% of its trial median, shrunk by a 0.5 s guard
/// band on each side. Returns a half-open [begin, end) range. Throws
/// DataError when no steady-state portion remains.
std::pair<std::size_t, std::size_t> steady_state_range(const TrialLog& log);

/// Returns the manual slice when given, otherwise the steady_state_range
/// slice. Output is always a contiguous sub-log of the input.
TrialLog clip_steady_state(const TrialLog& log,
                           std::optional<std::pair<std::size_t, std::size_t>> manual_range = {});

/// Adds back the weight the sensor taring removed from the down axis:
/// force_x + effective_mass * 9.81.
double gravity_augment(double force_x_N, double effective_mass_kg);

}  // namespace vascrew
