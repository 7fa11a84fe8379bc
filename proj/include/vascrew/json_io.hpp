#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vascrew/geometry.hpp"
#include "vascrew/media_model.hpp"
#include "vascrew/metrics.hpp"
#include "vascrew/planner.hpp"

namespace vascrew {

// Geometry file: a single object with unit-suffixed field names
// (root_radius_mm, outer_radius_mm, plate_offset_d0_mm, strut_length_l_mm,
// min_length_mm, max_length_mm, thread_starts). Missing fields keep their
// defaults; unknown fields are rejected.
ScrewGeometry read_geometry_json(const std::filesystem::path& path);
void write_geometry_json(const std::filesystem::path& path, const ScrewGeometry& geometry);

// Media library: {"media": [ {name, slip_base, slip_slope_per_deg,
// thrust_scale_N, torque_base_Nm, torque_slope_Nm_per_deg}, ... ]}.
std::vector<MediaParams> read_media_library_json(const std::filesystem::path& path);
void write_media_library_json(const std::filesystem::path& path,
                              const std::vector<MediaParams>& media);

/// Lookup by name; throws DomainError listing the available names when
/// absent.
const MediaParams& find_media(const std::vector<MediaParams>& library, const std::string& name);

/// Metrics table as JSON, full float precision: {"trials": [ ... ]} with the
/// same fields as the CSV table.
void write_metrics_json(const std::filesystem::path& path, const std::vector<TrialRecord>& rows);

/// Per-media fit diagnostics report, written next to the fitted library.
struct FitReportEntry {
    std::string media_name;
    FitDiagnostics diagnostics;
    int observation_count = 0;
};
void write_fit_report_json(const std::filesystem::path& path,
                           const std::vector<FitReportEntry>& entries);

struct PlanRecord {
    std::string media;
    double lambda = 0.5;
    double angle_deg = 0.0;
    double actuator_length_mm = 0.0;
    bool clamped = false;
    double predicted_velocity_m_s = 0.0;
    double predicted_efficiency = 0.0;
};
void write_plan_json(const std::filesystem::path& path, const PlanRecord& plan);

void write_envelope_json(const std::filesystem::path& path, const LoadEnvelope& envelope);

std::string plan_to_json_string(const PlanRecord& plan);
std::string envelope_to_json_string(const LoadEnvelope& envelope);

}  // namespace vascrew
