#include "vascrew/media_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vascrew/errors.hpp"
#include "vascrew/kinematics.hpp"
#include "vascrew/nelder_mead.hpp"

namespace vascrew {

namespace {

constexpr double kCanonicalAngleDeg = 22.5;  // gauge anchor: mid operational range
constexpr double kTorqueFloor = 1e-12;
constexpr double kPenalty = 1e50;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double MediaParams::slip(const AngleOfAttack& theta) const {
    return std::clamp(slip_base + slip_slope_per_deg * theta.degrees(), 0.0, 1.0);
}

void MediaParams::validate() const {
    if (!(slip_base >= 0.0 && slip_base <= 1.0))
        throw DomainError("media '" + name + "': slip_base must lie in [0, 1]");
    if (!(slip_slope_per_deg >= 0.0))
        throw DomainError("media '" + name + "': slip_slope_per_deg must be >= 0");
    if (!(thrust_scale_N >= 0.0))
        throw DomainError("media '" + name + "': thrust_scale_N must be >= 0");
    if (!(torque_base_Nm >= 0.0) || !(torque_slope_Nm_per_deg >= 0.0))
        throw DomainError("media '" + name + "': torque coefficients must be >= 0");
}

double predict_velocity(const MediaParams& media, double effective_radius_mm,
                        const AngleOfAttack& theta, double omega_rad_s) {
    return no_slip_velocity(theta, effective_radius_mm, omega_rad_s) * (1.0 - media.slip(theta));
}

double predict_thrust(const MediaParams& media, const AngleOfAttack& theta) {
    return media.thrust_scale_N * std::cos(theta.radians()) * (1.0 - media.slip(theta));
}

double predict_torque(const MediaParams& media, const AngleOfAttack& theta) {
    return media.torque_base_Nm + media.torque_slope_Nm_per_deg * theta.degrees();
}

double predict_efficiency(const MediaParams& media, double effective_radius_mm,
                          const AngleOfAttack& theta, double omega_rad_s) {
    if (!(omega_rad_s > 0.0)) throw DomainError("efficiency prediction needs omega > 0");
    const double torque = predict_torque(media, theta);
    if (!(torque > 0.0))
        throw DataError("media '" + media.name + "': predicted torque is not positive");
    return predict_thrust(media, theta) * predict_velocity(media, effective_radius_mm, theta, omega_rad_s) /
           (torque * omega_rad_s);
}

FitResult fit_media(const std::vector<Observation>& observations, double effective_radius_mm,
                    const std::string& media_name) {
    if (observations.size() < 4)
        throw DomainError("fit for '" + media_name + "' needs at least 4 observations, got " +
                          std::to_string(observations.size()));
    std::vector<double> angles;
    for (const auto& o : observations) {
        if (!o.angle.is_operational())
            throw DomainError("fit for '" + media_name + "': observation angle " +
                              std::to_string(o.angle.degrees()) + " outside operational range");
        if (!(o.omega_rad_s > 0.0))
            throw DomainError("fit for '" + media_name + "': observation omega must be > 0");
        angles.push_back(o.angle.degrees());
    }
    std::sort(angles.begin(), angles.end());
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < angles.size(); ++i)
        if (angles[i] - angles[i - 1] > 1e-9) ++distinct;
    if (distinct < 3)
        throw DomainError("fit for '" + media_name + "' needs observations at >= 3 distinct angles, got " +
                          std::to_string(distinct));

    const double r_m = effective_radius_mm / 1000.0;

    // Channel normalization; an all-zero channel (no propulsion at all)
    // falls back to absolute residuals.
    double v_scale = 0.0, e_scale = 0.0;
    for (const auto& o : observations) {
        v_scale = std::max(v_scale, std::abs(o.v_measured_m_s));
        e_scale = std::max(e_scale, std::abs(o.efficiency_measured));
    }
    if (v_scale == 0.0) v_scale = 1.0;
    if (e_scale == 0.0) e_scale = 1.0;

    // Seed the slip line from the slip each observation implies on its own,
    // s_i = 1 - v_i / v_noslip_i, via least squares against the angle.
    std::vector<double> implied_slip;
    double theta_mean = 0.0, slip_mean = 0.0;
    for (const auto& o : observations) {
        const double ideal = o.omega_rad_s * r_m * std::tan(o.angle.radians());
        implied_slip.push_back(std::clamp(1.0 - o.v_measured_m_s / ideal, 0.0, 1.0));
        theta_mean += o.angle.degrees();
        slip_mean += implied_slip.back();
    }
    theta_mean /= double(observations.size());
    slip_mean /= double(observations.size());
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const double dth = observations[i].angle.degrees() - theta_mean;
        cov += dth * (implied_slip[i] - slip_mean);
        var += dth * dth;
    }
    const double slip_slope_seed = std::clamp(cov / var, 0.0, 0.1);
    const double slip_base_seed = std::clamp(slip_mean - slip_slope_seed * theta_mean, 0.0, 1.0);

    // Torque seed in the canonical gauge; thrust seed from the efficiency
    // level each usable observation implies.
    const double c0_seed = 0.5;
    const double c1_seed = 0.5 / kCanonicalAngleDeg;
    std::vector<double> f0_estimates;
    for (const auto& o : observations) {
        const double grip = 1.0 - std::clamp(slip_base_seed + slip_slope_seed * o.angle.degrees(), 0.0, 1.0);
        if (o.efficiency_measured > 0.0 && grip * grip > 1e-12) {
            const double torque_seed = c0_seed + c1_seed * o.angle.degrees();
            f0_estimates.push_back(o.efficiency_measured * torque_seed /
                                   (r_m * std::sin(o.angle.radians()) * grip * grip));
        }
    }
    const double f0_seed = f0_estimates.empty() ? 0.0 : median(f0_estimates);

    const std::vector<double> x0 = {slip_base_seed, slip_slope_seed, f0_seed, c0_seed, c1_seed};
    const std::vector<double> scales = {0.25, 0.01, std::max(1.0, std::abs(f0_seed)), 0.25, 0.02};
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<double> lower = {0.0, 0.0, 0.0, 0.0, 0.0};
    const std::vector<double> upper = {1.0, inf, inf, inf, inf};

    auto objective = [&](const std::vector<double>& p) {
        double sum = 0.0;
        for (const auto& o : observations) {
            const double th = o.angle.degrees();
            const double grip = 1.0 - std::clamp(p[0] + p[1] * th, 0.0, 1.0);
            const double torque = p[3] + p[4] * th;
            const double v_pred = o.omega_rad_s * r_m * std::tan(o.angle.radians()) * grip;
            if (!(torque > kTorqueFloor)) return kPenalty;
            const double thrust = p[2] * std::cos(o.angle.radians()) * grip;
            const double e_pred = thrust * v_pred / (torque * o.omega_rad_s);
            const double rv = (v_pred - o.v_measured_m_s) / v_scale;
            const double re = (e_pred - o.efficiency_measured) / e_scale;
            sum += rv * rv + re * re;
        }
        return sum;
    };

    NelderMeadOptions opts;
    opts.max_iterations = 2000;
    opts.diameter_tol = 1e-8;
    const NelderMeadResult nm = nelder_mead(objective, x0, scales, lower, upper, opts);

    FitResult result;
    result.params.name = media_name;
    result.params.slip_base = nm.x[0];
    result.params.slip_slope_per_deg = nm.x[1];
    result.params.thrust_scale_N = nm.x[2];
    result.params.torque_base_Nm = nm.x[3];
    result.params.torque_slope_Nm_per_deg = nm.x[4];

    // Canonical gauge: data cannot pin the joint scale of (thrust, torque),
    // so report the representative with torque(22.5 deg) = 1.
    const double gauge = result.params.torque_base_Nm +
                         result.params.torque_slope_Nm_per_deg * kCanonicalAngleDeg;
    if (gauge > 0.0) {
        result.params.thrust_scale_N /= gauge;
        result.params.torque_base_Nm /= gauge;
        result.params.torque_slope_Nm_per_deg /= gauge;
    }

    double sq_v = 0.0, sq_e = 0.0;
    for (const auto& o : observations) {
        const double v_pred = predict_velocity(result.params, effective_radius_mm, o.angle, o.omega_rad_s);
        const double e_pred = predict_efficiency(result.params, effective_radius_mm, o.angle, o.omega_rad_s);
        sq_v += (v_pred - o.v_measured_m_s) * (v_pred - o.v_measured_m_s);
        sq_e += (e_pred - o.efficiency_measured) * (e_pred - o.efficiency_measured);
    }
    result.diagnostics.rmse_velocity = std::sqrt(sq_v / double(observations.size()));
    result.diagnostics.rmse_efficiency = std::sqrt(sq_e / double(observations.size()));
    result.diagnostics.iterations = nm.iterations;
    result.diagnostics.converged = nm.converged;
    result.diagnostics.objective_initial = objective(x0);
    result.diagnostics.objective_final = nm.fmin;
    return result;
}

}  // namespace vascrew
