// vascrew: process screw-locomotion trial logs, fit media models, and plan
// angles of attack. See README.md for the file formats.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vascrew/csv_io.hpp"
#include "vascrew/errors.hpp"
#include "vascrew/geometry.hpp"
#include "vascrew/json_io.hpp"
#include "vascrew/kinematics.hpp"
#include "vascrew/media_model.hpp"
#include "vascrew/metrics.hpp"
#include "vascrew/planner.hpp"
#include "vascrew/signal_pipeline.hpp"
#include "vascrew/trial_log.hpp"

namespace fs = std::filesystem;
using namespace vascrew;

namespace {

struct GlobalConfig {
    std::string geometry_path;
    std::string media_lib_path;
    double cutoff_hz = 5.0;
    double mass_kg = 1.1;
    double radius_mm = 232.0;
    std::string format = "csv";
    std::string out_dir = "out";
};

ScrewGeometry load_geometry(const GlobalConfig& cfg) {
    if (cfg.geometry_path.empty()) {
        ScrewGeometry g;
        g.validate();
        return g;
    }
    return read_geometry_json(cfg.geometry_path);
}

std::vector<MediaParams> load_library(const GlobalConfig& cfg) {
    if (cfg.media_lib_path.empty())
        throw DomainError("--media-lib PATH is required for this command");
    return read_media_library_json(cfg.media_lib_path);
}

void note_written(const fs::path& p) { std::cerr << "wrote " << p.string() << "\n"; }

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw ParseError(path.string() + ": write failed");
}

std::string prediction_to_json_string(const std::string& media, double angle_deg, double omega,
                                      double v, double thrust, double torque, double eta) {
    nlohmann::ordered_json doc;
    doc["media"] = media;
    doc["angle_deg"] = angle_deg;
    doc["omega_rad_s"] = omega;
    doc["velocity_m_s"] = v;
    doc["thrust_N"] = thrust;
    doc["torque_Nm"] = torque;
    doc["efficiency"] = eta;
    return doc.dump(2);
}

// Manual clip ranges: an explicit --clips file wins; otherwise each trial
// may have a clips.csv sidecar in its own directory.
class ClipLookup {
public:
    explicit ClipLookup(const std::string& explicit_path) {
        if (!explicit_path.empty()) {
            explicit_ = read_clips_csv(explicit_path);
            have_explicit_ = true;
        }
    }

    std::optional<std::pair<std::size_t, std::size_t>> find(const fs::path& trial_path,
                                                            const std::string& trial_id) {
        if (have_explicit_) {
            const auto it = explicit_.find(trial_id);
            if (it == explicit_.end()) return std::nullopt;
            return it->second;
        }
        const fs::path dir = trial_path.parent_path();
        auto cached = per_dir_.find(dir.string());
        if (cached == per_dir_.end()) {
            std::map<std::string, std::pair<std::size_t, std::size_t>> table;
            const fs::path sidecar = dir / "clips.csv";
            if (fs::exists(sidecar)) table = read_clips_csv(sidecar);
            cached = per_dir_.emplace(dir.string(), std::move(table)).first;
        }
        const auto it = cached->second.find(trial_id);
        if (it == cached->second.end()) return std::nullopt;
        return it->second;
    }

private:
    bool have_explicit_ = false;
    std::map<std::string, std::pair<std::size_t, std::size_t>> explicit_;
    std::map<std::string, std::map<std::string, std::pair<std::size_t, std::size_t>>> per_dir_;
};

int cmd_process(const GlobalConfig& cfg, const std::vector<std::string>& inputs,
                const std::string& baseline_override, const std::string& clips_path) {
    if (inputs.empty()) throw DomainError("process needs at least one trial CSV");
    ClipLookup clips(clips_path);

    std::vector<TrialRecord> records;
    std::optional<BaselinePair> prev_baseline;
    std::string prev_id;

    for (const auto& input : inputs) {
        const fs::path trial_path(input);
        // Globs like data/*.csv sweep the baseline siblings in too; they are
        // never trials, so drop them instead of failing the whole batch.
        if (trial_path.filename().string().ends_with(".baseline.csv")) continue;
        const std::string trial_id = trial_path.stem().string();

        fs::path baseline_path = baseline_override.empty()
                                     ? trial_path.parent_path() / (trial_id + ".baseline.csv")
                                     : fs::path(baseline_override);
        if (!fs::exists(baseline_path))
            throw ParseError(baseline_path.string() + ": baseline file not found");

        const TrialLog raw = read_trial_csv(trial_path);
        const BaselinePair baseline = read_baseline_csv(baseline_path);

        if (prev_baseline) {
            const auto drift = baseline_drift(*prev_baseline, baseline);
            std::fprintf(stderr, "baseline drift %s -> %s:", prev_id.c_str(), trial_id.c_str());
            for (double d : drift) std::fprintf(stderr, " %.3g", d);
            std::fprintf(stderr, "\n");
        }
        prev_baseline = baseline;
        prev_id = trial_id;

        try {
            const TrialLog clipped = clip_steady_state(lowpass(tare(raw, baseline), cfg.cutoff_hz),
                                                       clips.find(trial_path, trial_id));
            TrialRecord rec;
            rec.trial_id = trial_id;
            rec.metrics = trial_metrics(clipped);
            rec.peak_force_N = peak_forces(clipped);
            records.push_back(std::move(rec));
            write_trial_csv(fs::path(cfg.out_dir) / "processed" / (trial_id + ".csv"), clipped);
        } catch (const DataError& e) {
            throw DataError(trial_id + ": " + e.what());
        }
    }

    if (records.empty())
        throw DomainError("process needs at least one trial CSV (baseline files do not count)");

    std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
        if (a.metrics.media_name != b.metrics.media_name)
            return a.metrics.media_name < b.metrics.media_name;
        if (a.metrics.commanded_angle.degrees() != b.metrics.commanded_angle.degrees())
            return a.metrics.commanded_angle.degrees() < b.metrics.commanded_angle.degrees();
        return a.trial_id < b.trial_id;
    });

    if (cfg.format == "json") {
        const fs::path table = fs::path(cfg.out_dir) / "metrics.json";
        write_metrics_json(table, records);
        note_written(table);
    } else {
        const fs::path table = fs::path(cfg.out_dir) / "metrics.csv";
        write_metrics_csv(table, records);
        note_written(table);
    }
    return 0;
}

int cmd_fit(const GlobalConfig& cfg, const std::string& metrics_path) {
    const std::vector<TrialRecord> records = read_metrics_csv(metrics_path);
    if (records.empty()) throw DomainError(metrics_path + ": metrics table has no rows");

    std::map<std::string, std::vector<Observation>> grouped;
    for (const auto& r : records) {
        grouped[r.metrics.media_name].push_back(Observation{r.metrics.commanded_angle,
                                                            r.metrics.omega_avg_rad_s,
                                                            r.metrics.v_avg_m_s,
                                                            r.metrics.efficiency});
    }

    std::vector<MediaParams> library;
    std::vector<FitReportEntry> report;
    int failures = 0;
    for (const auto& [name, observations] : grouped) {
        try {
            FitResult fit = fit_media(observations, cfg.radius_mm, name);
            library.push_back(fit.params);
            report.push_back(
                {name, fit.diagnostics, static_cast<int>(observations.size())});
        } catch (const Error& e) {
            ++failures;
            std::cerr << "fit skipped for media '" << name << "': " << e.what() << "\n";
        }
    }

    if (library.empty())
        throw DataError("no media could be fitted (" + std::to_string(failures) + " failed)");

    const fs::path lib_path = fs::path(cfg.out_dir) / "media_library.json";
    const fs::path report_path = fs::path(cfg.out_dir) / "fit_report.json";
    write_media_library_json(lib_path, library);
    write_fit_report_json(report_path, report);
    note_written(lib_path);
    note_written(report_path);
    return failures > 0 ? 4 : 0;
}

int cmd_predict(const GlobalConfig& cfg, const std::string& media_name, double angle_deg,
                double omega) {
    const std::vector<MediaParams> library = load_library(cfg);
    const MediaParams& media = find_media(library, media_name);
    const AngleOfAttack theta(angle_deg);

    const double v = predict_velocity(media, cfg.radius_mm, theta, omega);
    const double thrust = predict_thrust(media, theta);
    const double torque = predict_torque(media, theta);
    const double eta = predict_efficiency(media, cfg.radius_mm, theta, omega);

    if (cfg.format == "json") {
        const std::string payload = prediction_to_json_string(media_name, angle_deg, omega, v,
                                                              thrust, torque, eta);
        const fs::path out = fs::path(cfg.out_dir) / "predict.json";
        write_text(out, payload + "\n");
        note_written(out);
        std::cout << payload << "\n";
    } else {
        std::string payload = "media,angle_deg,omega_rad_s,velocity_m_s,thrust_N,torque_Nm,"
                              "efficiency\n";
        payload += media_name + ',' + format_sig6(angle_deg) + ',' + format_sig6(omega) + ',' +
                   format_sig6(v) + ',' + format_sig6(thrust) + ',' + format_sig6(torque) + ',' +
                   format_sig6(eta) + "\n";
        const fs::path out = fs::path(cfg.out_dir) / "predict.csv";
        write_text(out, payload);
        note_written(out);
        std::cout << payload;
    }
    return 0;
}

int cmd_plan(const GlobalConfig& cfg, const std::string& media_name, double lambda, double omega) {
    const ScrewGeometry geometry = load_geometry(cfg);
    const std::vector<MediaParams> library = load_library(cfg);
    const MediaParams& media = find_media(library, media_name);

    const AnglePlan plan = choose_angle(media, cfg.radius_mm, omega, Objective{lambda});
    const ActuatorCommand cmd = angle_to_actuator_length(AngleOfAttack(plan.angle_deg), geometry);

    PlanRecord record;
    record.media = media_name;
    record.lambda = lambda;
    record.angle_deg = plan.angle_deg;
    record.actuator_length_mm = cmd.length_mm;
    record.clamped = cmd.clamped;
    record.predicted_velocity_m_s = plan.velocity_m_s;
    record.predicted_efficiency = plan.efficiency;

    const fs::path out = fs::path(cfg.out_dir) / ("plan_" + media_name + ".json");
    write_plan_json(out, record);
    note_written(out);
    std::cout << plan_to_json_string(record) << "\n";
    return 0;
}

int cmd_pareto(const GlobalConfig& cfg, const std::string& media_name, double omega,
               double grid_step) {
    const std::vector<MediaParams> library = load_library(cfg);
    const MediaParams& media = find_media(library, media_name);

    const std::vector<ParetoPoint> front = pareto_front(media, cfg.radius_mm, omega, grid_step);
    const fs::path out = fs::path(cfg.out_dir) / ("pareto_" + media_name + ".csv");
    write_pareto_csv(out, front);
    note_written(out);
    return 0;
}

int cmd_envelope(const GlobalConfig& cfg, const std::string& metrics_path) {
    const std::vector<TrialRecord> records = read_metrics_csv(metrics_path);
    if (records.empty()) throw DomainError(metrics_path + ": metrics table has no rows");

    std::vector<std::array<double, 3>> peaks;
    peaks.reserve(records.size());
    for (const auto& r : records) peaks.push_back(r.peak_force_N);

    const LoadEnvelope envelope = load_envelope(peaks, cfg.mass_kg);
    const fs::path out = fs::path(cfg.out_dir) / "envelope.json";
    write_envelope_json(out, envelope);
    note_written(out);
    std::cout << envelope_to_json_string(envelope) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variable-angle screw locomotion toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalConfig cfg;
    app.add_option("--geometry", cfg.geometry_path, "screw geometry JSON (defaults built in)");
    app.add_option("--media-lib", cfg.media_lib_path, "media library JSON");
    app.add_option("--cutoff-hz", cfg.cutoff_hz, "low-pass cutoff frequency")
        ->capture_default_str();
    app.add_option("--mass-kg", cfg.mass_kg, "effective unit mass for the load envelope")
        ->capture_default_str();
    app.add_option("--radius-mm", cfg.radius_mm, "effective blade radius for advance predictions")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "metrics table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();

    std::vector<std::string> process_inputs;
    std::string baseline_override, clips_path;
    CLI::App* process = app.add_subcommand(
        "process", "tare, filter and clip trial logs; emit processed logs and a metrics table");
    process->add_option("trials", process_inputs, "trial CSV files")->required();
    process->add_option("--baseline", baseline_override,
                        "baseline CSV applied to every trial (default <trial>.baseline.csv)");
    process->add_option("--clips", clips_path,
                        "manual steady-state ranges (default clips.csv next to the trials)");

    std::string fit_metrics_path;
    CLI::App* fit = app.add_subcommand("fit", "fit per-media interaction models to a metrics table");
    fit->add_option("metrics", fit_metrics_path, "metrics CSV from 'process'")->required();

    std::string predict_media;
    double predict_angle = 0.0, predict_omega = 0.0;
    CLI::App* predict = app.add_subcommand("predict", "evaluate a fitted media model at one angle");
    predict->add_option("--media", predict_media, "media name from the library")->required();
    predict->add_option("--angle-deg", predict_angle, "blade angle of attack")->required();
    predict->add_option("--omega", predict_omega, "screw angular velocity, rad/s")->required();

    std::string plan_media;
    double plan_lambda = 0.5, plan_omega = 0.0;
    CLI::App* plan =
        app.add_subcommand("plan", "choose the angle of attack for a velocity/efficiency blend");
    plan->add_option("--media", plan_media, "media name from the library")->required();
    plan->add_option("--lambda", plan_lambda, "velocity weight, 0 = efficiency, 1 = velocity")
        ->capture_default_str();
    plan->add_option("--omega", plan_omega, "screw angular velocity, rad/s")->required();

    std::string pareto_media;
    double pareto_omega = 0.0, pareto_step = 1.0;
    CLI::App* pareto =
        app.add_subcommand("pareto", "emit the velocity/efficiency front for one media");
    pareto->add_option("--media", pareto_media, "media name from the library")->required();
    pareto->add_option("--omega", pareto_omega, "screw angular velocity, rad/s")->required();
    pareto->add_option("--step-deg", pareto_step, "angle grid step")->capture_default_str();

    std::string envelope_metrics_path;
    CLI::App* envelope =
        app.add_subcommand("envelope", "compute the structural load envelope from a metrics table");
    envelope->add_option("metrics", envelope_metrics_path, "metrics CSV from 'process'")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (process->parsed())
            return cmd_process(cfg, process_inputs, baseline_override, clips_path);
        if (fit->parsed()) return cmd_fit(cfg, fit_metrics_path);
        if (predict->parsed()) return cmd_predict(cfg, predict_media, predict_angle, predict_omega);
        if (plan->parsed()) return cmd_plan(cfg, plan_media, plan_lambda, plan_omega);
        if (pareto->parsed()) return cmd_pareto(cfg, pareto_media, pareto_omega, pareto_step);
        if (envelope->parsed()) return cmd_envelope(cfg, envelope_metrics_path);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
