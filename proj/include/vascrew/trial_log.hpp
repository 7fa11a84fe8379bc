#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vascrew/geometry.hpp"

namespace vascrew {

/// One force/torque snapshot pair bracketing a trial: the unit suspended in
/// air (free_hanging, drift diagnostic) and resting on the media (set_down,
/// the taring reference). Order of entries: fx, fy, fz [N], tx, ty, tz [N*m].
struct BaselinePair {
    std::array<double, 6> free_hanging{};
    std::array<double, 6> set_down{};

    void validate() const;  // throws DomainError on non-finite entries
};

/// Difference cur.free_hanging - prev.free_hanging, reported between
/// consecutive trials as a sensor drift diagnostic. Never applied to data.
std::array<double, 6> baseline_drift(const BaselinePair& prev, const BaselinePair& cur);

/// Time series of one locomotion trial at a fixed sample rate.
///
/// Axis convention follows the test-bed force/torque sensor: +Z forward
/// (thrust), +X down (gravity-aligned), +Y right. Carriage position is
/// optional -- force/torque analyses work without it, velocity metrics
/// raise an error. Instances are immutable by convention: every pipeline
/// stage returns a new log.
struct TrialLog {
    double sample_rate_hz = 0.0;
    std::vector<double> t_s;
    std::vector<double> fx_N, fy_N, fz_N;
    std::vector<double> tx_Nm, ty_Nm, tz_Nm;
    std::vector<double> omega_rad_s;
    std::optional<std::vector<double>> pos_m;
    std::string media_name;
    AngleOfAttack commanded_angle{0.0};

    std::size_t size() const { return t_s.size(); }

    /// Invariants: all channels share one length >= 2, timestamps strictly
    /// increasing and consistent with sample_rate_hz within 1% jitter.
    void validate() const;

    /// Contiguous sub-log [begin, end). Metadata is carried over.
    TrialLog slice(std::size_t begin, std::size_t end) const;
};

}  // namespace vascrew
