// Regenerates data/synthetic: one 12 s trial at 125 Hz per (media, angle)
// with baselines, built from the same interaction model the fitter assumes
// plus sensor noise and an 18 Hz interference tone. The checked-in files
// were produced by this tool; rerun it only if the model constants change
// (the RNG stream is implementation defined, so bytes may differ across
// standard libraries even with the fixed seed).

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vascrew/csv_io.hpp"
#include "vascrew/kinematics.hpp"
#include "vascrew/media_model.hpp"
#include "vascrew/trial_log.hpp"

using namespace vascrew;

namespace {

constexpr double kSampleRate = 125.0;
constexpr double kDuration = 12.0;
constexpr double kOmega0 = 2.0;
constexpr double kRadiusMm = 232.0;
constexpr double kRampUpStart = 0.5, kRampUpEnd = 1.5;
constexpr double kRampDownStart = 11.5, kRampDownEnd = 12.0;

// Spin profile: idle, linear ramp up, hold, linear ramp down.
double omega_at(double t) {
    if (t < kRampUpStart) return 0.0;
    if (t < kRampUpEnd) return kOmega0 * (t - kRampUpStart) / (kRampUpEnd - kRampUpStart);
    if (t < kRampDownStart) return kOmega0;
    if (t < kRampDownEnd) return kOmega0 * (1.0 - (t - kRampDownStart) / (kRampDownEnd - kRampDownStart));
    return 0.0;
}

// Integral of omega_at from 0 to t, for the carriage position channel.
double omega_integral(double t) {
    double acc = 0.0;
    if (t > kRampUpStart) {
        const double d = std::min(t, kRampUpEnd) - kRampUpStart;
        acc += kOmega0 * d * d / (2.0 * (kRampUpEnd - kRampUpStart));
    }
    if (t > kRampUpEnd) acc += kOmega0 * (std::min(t, kRampDownStart) - kRampUpEnd);
    if (t > kRampDownStart) {
        const double d = std::min(t, kRampDownEnd) - kRampDownStart;
        const double T = kRampDownEnd - kRampDownStart;
        acc += kOmega0 * (d - d * d / (2.0 * T));
    }
    return acc;
}

struct MediaRecipe {
    MediaParams params;
    bool propels = true;     // sand never advances regardless of its torque
    double fx_base_N = 8.0;  // down-axis reaction while the unit runs
};

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "data/synthetic";
    std::filesystem::create_directories(out_dir);

    std::vector<MediaRecipe> media;
    media.push_back({{"mud", 0.10, 0.006, 7.0, 0.04, 0.96 / 22.5}, true, 8.0});
    media.push_back({{"big_gravel", 0.18, 0.007, 5.2, 0.05, 0.95 / 22.5}, true, 9.0});
    media.push_back({{"small_gravel", 0.25, 0.008, 3.7, 0.06, 0.94 / 22.5}, true, 10.0});
    media.push_back({{"sand", 1.0, 0.0, 0.0, 0.30, 0.01}, false, 11.0});

    const double angles[] = {10.0, 15.0, 20.0, 25.0, 30.0, 35.0};
    const int n = static_cast<int>(kDuration * kSampleRate);

    std::mt19937 rng(20240817u);
    std::normal_distribution<double> force_noise(0.0, 0.02);
    std::normal_distribution<double> torque_noise(0.0, 0.005);
    std::normal_distribution<double> omega_noise(0.0, 0.01);

    int trial_index = 0;
    for (const auto& recipe : media) {
        for (double angle : angles) {
            const AngleOfAttack theta(angle);
            const double slip = recipe.params.slip(theta);
            const double v_ss =
                recipe.propels ? no_slip_velocity(theta, kRadiusMm, kOmega0) * (1.0 - slip) : 0.0;
            const double thrust = predict_thrust(recipe.params, theta);
            const double torque = predict_torque(recipe.params, theta);
            const double fx = recipe.fx_base_N + 0.05 * angle;

            // Sensor rest reading on the media; taring must remove it.
            const std::array<double, 6> set_down = {-(9.81 + 0.2 * recipe.fx_base_N), 0.8, 2.2,
                                                    0.3, -0.2, 0.15};

            TrialLog log;
            log.sample_rate_hz = kSampleRate;
            log.media_name = recipe.params.name;
            log.commanded_angle = theta;
            log.pos_m = std::vector<double>();
            for (int i = 0; i < n; ++i) {
                const double t = i / kSampleRate;
                const double u = omega_at(t) / kOmega0;  // 0..1 activity factor
                const double hum = 0.3 * std::sin(2.0 * M_PI * 18.0 * t);
                log.t_s.push_back(t);
                log.fx_N.push_back(fx * u + set_down[0] + force_noise(rng) + hum);
                log.fy_N.push_back(0.3 * u + set_down[1] + force_noise(rng) + hum);
                log.fz_N.push_back(thrust * u + set_down[2] + force_noise(rng) + hum);
                log.tx_Nm.push_back(0.1 * u + set_down[3] + torque_noise(rng));
                log.ty_Nm.push_back(-0.05 * u + set_down[4] + torque_noise(rng));
                log.tz_Nm.push_back(torque * u + set_down[5] + torque_noise(rng));
                log.omega_rad_s.push_back(omega_at(t) + omega_noise(rng));
                log.pos_m->push_back(v_ss / kOmega0 * omega_integral(t));
            }

            BaselinePair baseline;
            baseline.set_down = set_down;
            baseline.free_hanging = set_down;
            baseline.free_hanging[0] += 9.81 + 0.2 * recipe.fx_base_N;  // weight off the media
            for (auto& c : baseline.free_hanging) c += 0.002 * trial_index;  // slow drift

            const std::string stem =
                recipe.params.name + "_a" + std::to_string(static_cast<int>(angle));
            write_trial_csv(out_dir / (stem + ".csv"), log);
            write_baseline_csv(out_dir / (stem + ".baseline.csv"), baseline);
            ++trial_index;
        }
    }

    std::printf("wrote %d trials to %s\n", trial_index, out_dir.string().c_str());
    return 0;
}
