#include "vascrew/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vascrew/errors.hpp"
#include "vascrew/signal_pipeline.hpp"

namespace vascrew {

namespace {
double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}
}  // namespace

double locomotive_efficiency(double f_thrust_N, double v_m_s, double tau_in_Nm,
                             double omega_rad_s) {
    if (!(omega_rad_s > 0.0))
        throw DataError("invalid trial: average angular velocity must be > 0");
    if (tau_in_Nm == 0.0) throw DataError("invalid trial: zero average input torque");
    return (f_thrust_N * v_m_s) / (tau_in_Nm * omega_rad_s);
}

TrialMetrics trial_metrics(const TrialLog& clipped) {
    clipped.validate();
    if (!clipped.pos_m)
        throw DataError("trial metrics need the carriage position channel");

    TrialMetrics m;
    const double duration = clipped.t_s.back() - clipped.t_s.front();
    m.v_avg_m_s = (clipped.pos_m->back() - clipped.pos_m->front()) / duration;
    m.f_thrust_max_N = *std::max_element(clipped.fz_N.begin(), clipped.fz_N.end());
    m.tau_avg_Nm = mean(clipped.tz_Nm);
    m.omega_avg_rad_s = mean(clipped.omega_rad_s);
    m.efficiency =
        locomotive_efficiency(m.f_thrust_max_N, m.v_avg_m_s, m.tau_avg_Nm, m.omega_avg_rad_s);
    m.media_name = clipped.media_name;
    m.commanded_angle = clipped.commanded_angle;
    return m;
}

std::array<double, 3> peak_forces(const TrialLog& log) {
    log.validate();
    const std::vector<double>* axes[3] = {&log.fx_N, &log.fy_N, &log.fz_N};
    std::array<double, 3> peak{};
    for (int a = 0; a < 3; ++a)
        for (double v : *axes[a])
            if (std::abs(v) > std::abs(peak[a])) peak[a] = v;
    return peak;
}

LoadEnvelope load_envelope(const std::vector<std::array<double, 3>>& trial_peaks,
                           double effective_mass_kg) {
    if (trial_peaks.empty()) throw DomainError("load envelope needs at least one peak vector");
    if (!(effective_mass_kg >= 0.0)) throw DomainError("effective mass must be >= 0 kg");

    LoadEnvelope env;
    env.effective_mass_kg = effective_mass_kg;
    for (const auto& p : trial_peaks)
        for (int a = 0; a < 3; ++a)
            if (std::abs(p[a]) > std::abs(env.applied_force_xyz_N[a]))
                env.applied_force_xyz_N[a] = p[a];

    // X is the down axis; the sensor was tared with the unit hanging, so the
    // structural load case restores the unit's weight there.
    env.applied_force_xyz_N[0] = gravity_augment(env.applied_force_xyz_N[0], effective_mass_kg);
    env.magnitude_N = std::sqrt(env.applied_force_xyz_N[0] * env.applied_force_xyz_N[0] +
                                env.applied_force_xyz_N[1] * env.applied_force_xyz_N[1] +
                                env.applied_force_xyz_N[2] * env.applied_force_xyz_N[2]);
    return env;
}

}  // namespace vascrew
