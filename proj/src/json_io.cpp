#include "vascrew/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "vascrew/errors.hpp"

namespace vascrew {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void store(const std::filesystem::path& path, const ordered& doc) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw ParseError(path.string() + ": write failed");
}

double number_at(const json& obj, const char* key, const std::filesystem::path& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path.string() + ": missing field '" + key + "'");
    if (!it->is_number()) throw ParseError(path.string() + ": field '" + key + "' is not a number");
    return it->get<double>();
}

}  // namespace

ScrewGeometry read_geometry_json(const std::filesystem::path& path) {
    const json doc = load(path);
    if (!doc.is_object()) throw ParseError(path.string() + ": expected a JSON object");

    ScrewGeometry g;
    for (const auto& [key, value] : doc.items()) {
        if (key == "root_radius_mm")
            g.root_radius_mm = value.get<double>();
        else if (key == "outer_radius_mm")
            g.outer_radius_mm = value.get<double>();
        else if (key == "plate_offset_d0_mm")
            g.plate_offset_d0_mm = value.get<double>();
        else if (key == "strut_length_l_mm")
            g.strut_length_l_mm = value.get<double>();
        else if (key == "min_length_mm")
            g.min_length_mm = value.get<double>();
        else if (key == "max_length_mm")
            g.max_length_mm = value.get<double>();
        else if (key == "thread_starts")
            g.thread_starts = value.get<int>();
        else
            throw ParseError(path.string() + ": unknown geometry field '" + key + "'");
    }
    g.validate();
    return g;
}

void write_geometry_json(const std::filesystem::path& path, const ScrewGeometry& geometry) {
    ordered doc;
    doc["root_radius_mm"] = geometry.root_radius_mm;
    doc["outer_radius_mm"] = geometry.outer_radius_mm;
    doc["plate_offset_d0_mm"] = geometry.plate_offset_d0_mm;
    doc["strut_length_l_mm"] = geometry.strut_length_l_mm;
    doc["min_length_mm"] = geometry.min_length_mm;
    doc["max_length_mm"] = geometry.max_length_mm;
    doc["thread_starts"] = geometry.thread_starts;
    store(path, doc);
}

std::vector<MediaParams> read_media_library_json(const std::filesystem::path& path) {
    const json doc = load(path);
    const auto it = doc.find("media");
    if (it == doc.end() || !it->is_array())
        throw ParseError(path.string() + ": expected an object with a 'media' array");

    std::vector<MediaParams> library;
    for (const auto& entry : *it) {
        if (!entry.is_object())
            throw ParseError(path.string() + ": media entries must be objects");
        MediaParams m;
        const auto name_it = entry.find("name");
        if (name_it == entry.end() || !name_it->is_string())
            throw ParseError(path.string() + ": media entry missing string field 'name'");
        m.name = name_it->get<std::string>();
        m.slip_base = number_at(entry, "slip_base", path);
        m.slip_slope_per_deg = number_at(entry, "slip_slope_per_deg", path);
        m.thrust_scale_N = number_at(entry, "thrust_scale_N", path);
        m.torque_base_Nm = number_at(entry, "torque_base_Nm", path);
        m.torque_slope_Nm_per_deg = number_at(entry, "torque_slope_Nm_per_deg", path);
        m.validate();
        library.push_back(std::move(m));
    }
    return library;
}

void write_media_library_json(const std::filesystem::path& path,
                              const std::vector<MediaParams>& media) {
    ordered doc;
    doc["media"] = ordered::array();
    for (const auto& m : media) {
        ordered entry;
        entry["name"] = m.name;
        entry["slip_base"] = m.slip_base;
        entry["slip_slope_per_deg"] = m.slip_slope_per_deg;
        entry["thrust_scale_N"] = m.thrust_scale_N;
        entry["torque_base_Nm"] = m.torque_base_Nm;
        entry["torque_slope_Nm_per_deg"] = m.torque_slope_Nm_per_deg;
        doc["media"].push_back(entry);
    }
    store(path, doc);
}

const MediaParams& find_media(const std::vector<MediaParams>& library, const std::string& name) {
    for (const auto& m : library)
        if (m.name == name) return m;
    std::string available;
    for (const auto& m : library) {
        if (!available.empty()) available += ", ";
        available += m.name;
    }
    throw DomainError("unknown media '" + name + "' (available: " +
                      (available.empty() ? "<none>" : available) + ")");
}

void write_metrics_json(const std::filesystem::path& path, const std::vector<TrialRecord>& rows) {
    ordered doc;
    doc["trials"] = ordered::array();
    for (const auto& r : rows) {
        ordered entry;
        entry["trial_id"] = r.trial_id;
        entry["media_name"] = r.metrics.media_name;
        entry["commanded_angle_deg"] = r.metrics.commanded_angle.degrees();
        entry["v_avg_m_s"] = r.metrics.v_avg_m_s;
        entry["f_thrust_max_N"] = r.metrics.f_thrust_max_N;
        entry["tau_avg_Nm"] = r.metrics.tau_avg_Nm;
        entry["omega_avg_rad_s"] = r.metrics.omega_avg_rad_s;
        entry["efficiency"] = r.metrics.efficiency;
        entry["peak_fx_N"] = r.peak_force_N[0];
        entry["peak_fy_N"] = r.peak_force_N[1];
        entry["peak_fz_N"] = r.peak_force_N[2];
        doc["trials"].push_back(entry);
    }
    store(path, doc);
}

void write_fit_report_json(const std::filesystem::path& path,
                           const std::vector<FitReportEntry>& entries) {
    ordered doc;
    doc["fits"] = ordered::array();
    for (const auto& e : entries) {
        ordered entry;
        entry["media_name"] = e.media_name;
        entry["observation_count"] = e.observation_count;
        entry["rmse_velocity"] = e.diagnostics.rmse_velocity;
        entry["rmse_efficiency"] = e.diagnostics.rmse_efficiency;
        entry["iterations"] = e.diagnostics.iterations;
        entry["converged"] = e.diagnostics.converged;
        doc["fits"].push_back(entry);
    }
    store(path, doc);
}

namespace {

ordered plan_doc(const PlanRecord& plan) {
    ordered doc;
    doc["media"] = plan.media;
    doc["lambda"] = plan.lambda;
    doc["angle_deg"] = plan.angle_deg;
    doc["actuator_length_mm"] = plan.actuator_length_mm;
    doc["clamped"] = plan.clamped;
    doc["predicted_velocity_m_s"] = plan.predicted_velocity_m_s;
    doc["predicted_efficiency"] = plan.predicted_efficiency;
    return doc;
}

ordered envelope_doc(const LoadEnvelope& envelope) {
    ordered doc;
    doc["applied_force_xyz_N"] = envelope.applied_force_xyz_N;
    doc["magnitude_N"] = envelope.magnitude_N;
    doc["effective_mass_kg"] = envelope.effective_mass_kg;
    return doc;
}

}  // namespace

void write_plan_json(const std::filesystem::path& path, const PlanRecord& plan) {
    store(path, plan_doc(plan));
}

void write_envelope_json(const std::filesystem::path& path, const LoadEnvelope& envelope) {
    store(path, envelope_doc(envelope));
}

std::string plan_to_json_string(const PlanRecord& plan) { return plan_doc(plan).dump(2); }

std::string envelope_to_json_string(const LoadEnvelope& envelope) {
    return envelope_doc(envelope).dump(2);
}

}  // namespace vascrew
