#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vascrew/metrics.hpp"
#include "vascrew/planner.hpp"
#include "vascrew/trial_log.hpp"

namespace vascrew {

/// Fixed 6-significant-digit formatting for summary tables (deterministic,
/// plot friendly).
std::string format_sig6(double v);

/// Shortest decimal string that parses back to exactly the same double.
/// Used for sample logs so a processed file re-ingests without loss.
std::string format_exact(double v);

/// Parses a whole string as a double; throws ParseError tagged with
/// "<context>:" on failure. Locale independent.
double parse_double(const std::string& text, const std::string& context);

// --- trial logs ------------------------------------------------------------

/// Reads one trial from CSV. Expected layout: optional '#key=value' comment
/// lines carrying media_name, commanded_angle_deg and sample_rate_hz
/// (sample_rate_hz is mandatory), then the exact header
///   t_s,fx_N,fy_N,fz_N,tx_Nm,ty_Nm,tz_Nm,omega_rad_s,pos_m
/// and one row per sample. The pos_m field may be empty on every row (no
/// carriage encoder); a mix of empty and filled is an error. Errors are
/// ParseError with "path:line:" prefixes.
TrialLog read_trial_csv(const std::filesystem::path& path);

/// Writes a trial in the same schema read_trial_csv accepts, metadata
/// comments first, samples with round-trip exact floats.
void write_trial_csv(const std::filesystem::path& path, const TrialLog& log);

// --- baselines --------------------------------------------------------------

/// Reads the two bracketing force/torque snapshots. Layout:
///   phase,fx_N,fy_N,fz_N,tx_Nm,ty_Nm,tz_Nm
/// with exactly one free_hanging and one set_down row, either order.
BaselinePair read_baseline_csv(const std::filesystem::path& path);

void write_baseline_csv(const std::filesystem::path& path, const BaselinePair& pair);

// --- metrics table ----------------------------------------------------------

/// Flat per-trial table, one row each, 6-significant-digit floats. Columns:
///   trial_id,media_name,commanded_angle_deg,v_avg_m_s,f_thrust_max_N,
///   tau_avg_Nm,omega_avg_rad_s,efficiency,peak_fx_N,peak_fy_N,peak_fz_N
void write_metrics_csv(const std::filesystem::path& path, const std::vector<TrialRecord>& rows);

/// Reads a table written by write_metrics_csv (fit and envelope inputs).
std::vector<TrialRecord> read_metrics_csv(const std::filesystem::path& path);

// --- manual clip ranges -----------------------------------------------------

/// Sidecar holding manual steady-state ranges, one trial per row:
///   trial_id,start_sample,end_sample
/// Half-open sample index ranges keyed by trial id.
std::map<std::string, std::pair<std::size_t, std::size_t>> read_clips_csv(
    const std::filesystem::path& path);

// --- planner output ---------------------------------------------------------

/// Front as plot-ready CSV: angle_deg,velocity_m_s,efficiency.
void write_pareto_csv(const std::filesystem::path& path, const std::vector<ParetoPoint>& front);

}  // namespace vascrew
