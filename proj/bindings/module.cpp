#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace vascrew;

PYBIND11_MODULE(_core, m) {
    m.doc() = "variable-angle screw locomotion toolkit";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

    py::class_<ScrewGeometry>(m, "ScrewGeometry")
        .def(py::init<>())
        .def_readwrite("root_radius_mm", &ScrewGeometry::root_radius_mm)
        .def_readwrite("outer_radius_mm", &ScrewGeometry::outer_radius_mm)
        .def_readwrite("plate_offset_d0_mm", &ScrewGeometry::plate_offset_d0_mm)
        .def_readwrite("strut_length_l_mm", &ScrewGeometry::strut_length_l_mm)
        .def_readwrite("min_length_mm", &ScrewGeometry::min_length_mm)
        .def_readwrite("max_length_mm", &ScrewGeometry::max_length_mm)
        .def_readwrite("thread_starts", &ScrewGeometry::thread_starts)
        .def("validate", &ScrewGeometry::validate)
        .def("mean_blade_radius_mm", &ScrewGeometry::mean_blade_radius_mm);

    py::class_<AngleOfAttack>(m, "AngleOfAttack")
        .def(py::init<double>(), py::arg("degrees"))
        .def_property_readonly("degrees", &AngleOfAttack::degrees)
        .def_property_readonly("radians", &AngleOfAttack::radians)
        .def_property_readonly("is_operational", &AngleOfAttack::is_operational)
        .def("__repr__", [](const AngleOfAttack& a) {
            return "AngleOfAttack(" + std::to_string(a.degrees()) + ")";
        });

    m.def("angle_from_length", &angle_from_length, py::arg("geometry"), py::arg("d_mm"));
    m.def("length_from_angle", &length_from_angle, py::arg("geometry"), py::arg("theta"));
    m.def("lead_per_revolution", &lead_per_revolution, py::arg("theta"),
          py::arg("effective_radius_mm"));
    m.def("no_slip_velocity", &no_slip_velocity, py::arg("theta"), py::arg("effective_radius_mm"),
          py::arg("omega_rad_s"));

    py::class_<BaselinePair>(m, "BaselinePair")
        .def(py::init<>())
        .def_readwrite("free_hanging", &BaselinePair::free_hanging)
        .def_readwrite("set_down", &BaselinePair::set_down)
        .def("validate", &BaselinePair::validate);
    m.def("baseline_drift", &baseline_drift, py::arg("prev"), py::arg("cur"));

    py::class_<TrialLog>(m, "TrialLog")
        .def(py::init<>())
        .def_readwrite("sample_rate_hz", &TrialLog::sample_rate_hz)
        .def_readwrite("t_s", &TrialLog::t_s)
        .def_readwrite("fx_N", &TrialLog::fx_N)
        .def_readwrite("fy_N", &TrialLog::fy_N)
        .def_readwrite("fz_N", &TrialLog::fz_N)
        .def_readwrite("tx_Nm", &TrialLog::tx_Nm)
        .def_readwrite("ty_Nm", &TrialLog::ty_Nm)
        .def_readwrite("tz_Nm", &TrialLog::tz_Nm)
        .def_readwrite("omega_rad_s", &TrialLog::omega_rad_s)
        .def_readwrite("pos_m", &TrialLog::pos_m)
        .def_readwrite("media_name", &TrialLog::media_name)
        .def_readwrite("commanded_angle", &TrialLog::commanded_angle)
        .def("size", &TrialLog::size)
        .def("validate", &TrialLog::validate)
        .def("slice", &TrialLog::slice, py::arg("begin"), py::arg("end"));

    m.def("tare", &tare, py::arg("log"), py::arg("baseline"));
    m.def("lowpass", &lowpass, py::arg("log"), py::arg("cutoff_hz"));
    m.def("butterworth_filtfilt", &butterworth_filtfilt, py::arg("x"), py::arg("sample_rate_hz"),
          py::arg("cutoff_hz"));
    m.def("steady_state_range", &steady_state_range, py::arg("log"));
    m.def("clip_steady_state", &clip_steady_state, py::arg("log"),
          py::arg("manual_range") = std::nullopt);
    m.def("gravity_augment", &gravity_augment, py::arg("force_x_N"), py::arg("effective_mass_kg"));

    py::class_<TrialMetrics>(m, "TrialMetrics")
        .def(py::init<>())
        .def_readwrite("v_avg_m_s", &TrialMetrics::v_avg_m_s)
        .def_readwrite("f_thrust_max_N", &TrialMetrics::f_thrust_max_N)
        .def_readwrite("tau_avg_Nm", &TrialMetrics::tau_avg_Nm)
        .def_readwrite("omega_avg_rad_s", &TrialMetrics::omega_avg_rad_s)
        .def_readwrite("efficiency", &TrialMetrics::efficiency)
        .def_readwrite("media_name", &TrialMetrics::media_name)
        .def_readwrite("commanded_angle", &TrialMetrics::commanded_angle);

    py::class_<LoadEnvelope>(m, "LoadEnvelope")
        .def(py::init<>())
        .def_readwrite("applied_force_xyz_N", &LoadEnvelope::applied_force_xyz_N)
        .def_readwrite("magnitude_N", &LoadEnvelope::magnitude_N)
        .def_readwrite("effective_mass_kg", &LoadEnvelope::effective_mass_kg);

    m.def("locomotive_efficiency", &locomotive_efficiency, py::arg("f_thrust_N"),
          py::arg("v_m_s"), py::arg("tau_in_Nm"), py::arg("omega_rad_s"));
    m.def("trial_metrics", &trial_metrics, py::arg("clipped"));
    m.def("peak_forces", &peak_forces, py::arg("log"));
    m.def("load_envelope", &load_envelope, py::arg("trial_peaks"), py::arg("effective_mass_kg"));

    py::class_<MediaParams>(m, "MediaParams")
        .def(py::init<>())
        .def_readwrite("name", &MediaParams::name)
        .def_readwrite("slip_base", &MediaParams::slip_base)
        .def_readwrite("slip_slope_per_deg", &MediaParams::slip_slope_per_deg)
        .def_readwrite("thrust_scale_N", &MediaParams::thrust_scale_N)
        .def_readwrite("torque_base_Nm", &MediaParams::torque_base_Nm)
        .def_readwrite("torque_slope_Nm_per_deg", &MediaParams::torque_slope_Nm_per_deg)
        .def("slip", &MediaParams::slip, py::arg("theta"))
        .def("validate", &MediaParams::validate);

    py::class_<Observation>(m, "Observation")
        .def(py::init<>())
        .def_readwrite("angle", &Observation::angle)
        .def_readwrite("omega_rad_s", &Observation::omega_rad_s)
        .def_readwrite("v_measured_m_s", &Observation::v_measured_m_s)
        .def_readwrite("efficiency_measured", &Observation::efficiency_measured);

    py::class_<FitDiagnostics>(m, "FitDiagnostics")
        .def_readonly("rmse_velocity", &FitDiagnostics::rmse_velocity)
        .def_readonly("rmse_efficiency", &FitDiagnostics::rmse_efficiency)
        .def_readonly("iterations", &FitDiagnostics::iterations)
        .def_readonly("converged", &FitDiagnostics::converged)
        .def_readonly("objective_initial", &FitDiagnostics::objective_initial)
        .def_readonly("objective_final", &FitDiagnostics::objective_final);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("params", &FitResult::params)
        .def_readonly("diagnostics", &FitResult::diagnostics);

    m.def("predict_velocity", &predict_velocity, py::arg("media"), py::arg("effective_radius_mm"),
          py::arg("theta"), py::arg("omega_rad_s"));
    m.def("predict_thrust", &predict_thrust, py::arg("media"), py::arg("theta"));
    m.def("predict_torque", &predict_torque, py::arg("media"), py::arg("theta"));
    m.def("predict_efficiency", &predict_efficiency, py::arg("media"),
          py::arg("effective_radius_mm"), py::arg("theta"), py::arg("omega_rad_s"));
    m.def("fit_media", &fit_media, py::arg("observations"), py::arg("effective_radius_mm"),
          py::arg("media_name"));

    py::class_<Objective>(m, "Objective")
        .def(py::init<>())
        .def(py::init([](double w) { return Objective{w}; }), py::arg("velocity_weight"))
        .def_readwrite("velocity_weight", &Objective::velocity_weight)
        .def("validate", &Objective::validate);

    py::class_<ParetoPoint>(m, "ParetoPoint")
        .def_readonly("angle_deg", &ParetoPoint::angle_deg)
        .def_readonly("velocity_m_s", &ParetoPoint::velocity_m_s)
        .def_readonly("efficiency", &ParetoPoint::efficiency);

    py::class_<AnglePlan>(m, "AnglePlan")
        .def_readonly("angle_deg", &AnglePlan::angle_deg)
        .def_readonly("velocity_m_s", &AnglePlan::velocity_m_s)
        .def_readonly("efficiency", &AnglePlan::efficiency);

    py::class_<ActuatorCommand>(m, "ActuatorCommand")
        .def_readonly("length_mm", &ActuatorCommand::length_mm)
        .def_readonly("clamped", &ActuatorCommand::clamped);

    m.def("pareto_front", &pareto_front, py::arg("media"), py::arg("effective_radius_mm"),
          py::arg("omega_rad_s"), py::arg("grid_step_deg"));
    m.def("choose_angle", &choose_angle, py::arg("media"), py::arg("effective_radius_mm"),
          py::arg("omega_rad_s"), py::arg("objective"));
    m.def("angle_to_actuator_length", &angle_to_actuator_length, py::arg("theta"),
          py::arg("geometry"));

    // file I/O, so scripts can consume and produce the CLI's formats
    m.def("read_trial_csv",
          [](const std::string& p) { return read_trial_csv(std::filesystem::path(p)); },
          py::arg("path"));
    m.def("write_trial_csv",
          [](const std::string& p, const TrialLog& log) {
              write_trial_csv(std::filesystem::path(p), log);
          },
          py::arg("path"), py::arg("log"));
    m.def("read_baseline_csv",
          [](const std::string& p) { return read_baseline_csv(std::filesystem::path(p)); },
          py::arg("path"));
    m.def("read_media_library_json",
          [](const std::string& p) { return read_media_library_json(std::filesystem::path(p)); },
          py::arg("path"));
    m.def("write_media_library_json",
          [](const std::string& p, const std::vector<MediaParams>& lib) {
              write_media_library_json(std::filesystem::path(p), lib);
          },
          py::arg("path"), py::arg("media"));
    m.def("read_geometry_json",
          [](const std::string& p) { return read_geometry_json(std::filesystem::path(p)); },
          py::arg("path"));
}
