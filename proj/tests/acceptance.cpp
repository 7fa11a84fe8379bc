// End-to-end acceptance gate. Each numbered check prints exactly one
// [PASS]/[FAIL] line; the process exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

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

using namespace vascrew;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail = "") {
    std::string line = ok ? "[PASS]" : "[FAIL]";
    line += " criterion " + std::to_string(n) + ": " + label;
    if (!ok && !detail.empty()) line += " (" + detail + ")";
    std::puts(line.c_str());
    if (!ok) ++failures;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }
    double gaussian() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * uniform01());
    }
};

fs::path scratch_root() {
    static const fs::path dir = [] {
        const auto tick = std::chrono::steady_clock::now().time_since_epoch().count();
        fs::path p = fs::temp_directory_path() / ("vascrew_acc_" + std::to_string(tick));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path sink = scratch_root() / ("cli_log_" + std::to_string(counter++));
    const std::string cmd = "\"" + std::string(VASCREW_CLI_PATH) + "\" " + args + " > \"" +
                            sink.string() + "\" 2>&1";
    const int rc = std::system(cmd.c_str());
#ifdef _WIN32
    return rc;
#else
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#endif
}

std::vector<fs::path> dataset_trials() {
    std::vector<fs::path> trials;
    for (const auto& entry : fs::directory_iterator(fs::path(VASCREW_DATA_DIR) / "synthetic")) {
        const std::string name = entry.path().filename().string();
        if (name.size() > 4 && name.substr(name.size() - 4) == ".csv" &&
            name.find(".baseline.") == std::string::npos)
            trials.push_back(entry.path());
    }
    std::sort(trials.begin(), trials.end());
    return trials;
}

// process + fit + plan + pareto over the bundled dataset, all through the CLI
bool run_pipeline(const fs::path& out_dir, std::string& why) {
    std::string trial_args;
    for (const auto& t : dataset_trials()) trial_args += " \"" + t.string() + "\"";
    if (trial_args.empty()) {
        why = "no bundled trials found";
        return false;
    }
    if (run_cli("--out \"" + out_dir.string() + "\" process" + trial_args) != 0) {
        why = "process failed";
        return false;
    }
    if (run_cli("--out \"" + out_dir.string() + "\" fit \"" + (out_dir / "metrics.csv").string() +
                "\"") != 0) {
        why = "fit failed";
        return false;
    }
    const std::string lib = (out_dir / "media_library.json").string();
    for (const auto& media : read_media_library_json(out_dir / "media_library.json")) {
        if (run_cli("--media-lib \"" + lib + "\" --out \"" + out_dir.string() +
                    "\" plan --media " + media.name + " --lambda 0.5 --omega 2") != 0) {
            why = "plan failed for " + media.name;
            return false;
        }
        if (run_cli("--media-lib \"" + lib + "\" --out \"" + out_dir.string() +
                    "\" pareto --media " + media.name + " --omega 2") != 0) {
            why = "pareto failed for " + media.name;
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

void criterion_1() {
    const char* label = "actuator travel maps onto the 10-35 degree band";
    try {
        const ScrewGeometry geo;
        const double low = angle_from_length(geo, 48.0).degrees();
        const double high = angle_from_length(geo, 88.0).degrees();
        const bool ok = low >= 9.7 && low <= 9.9 && high >= 34.6 && high <= 34.9;
        char detail[80];
        std::snprintf(detail, sizeof detail, "48mm -> %.4f deg, 88mm -> %.4f deg", low, high);
        report(1, label, ok, detail);
    } catch (const std::exception& e) {
        report(1, label, false, e.what());
    }
}

void criterion_2() {
    const char* label = "load envelope hits the design-point anchors";
    try {
        const LoadEnvelope env = load_envelope({{4.71, 20.74, 8.41}}, 1.1);
        const bool ok = std::abs(env.applied_force_xyz_N[0] - 15.5) <= 0.01 &&
                        std::abs(env.magnitude_N - 27.22) <= 0.01;
        char detail[80];
        std::snprintf(detail, sizeof detail, "applied X %.4f N, magnitude %.4f N",
                      env.applied_force_xyz_N[0], env.magnitude_N);
        report(2, label, ok, detail);
    } catch (const std::exception& e) {
        report(2, label, false, e.what());
    }
}

void criterion_3() {
    const char* label = "low-pass filter gain and phase behavior";
    try {
        const double fs = 125.0, fc = 5.0;
        const std::size_t n = 2500;

        std::vector<double> dc(n, 1.0);
        const auto dc_out = butterworth_filtfilt(dc, fs, fc);
        double dc_err = 0.0;
        for (double y : dc_out) dc_err = std::max(dc_err, std::abs(y - 1.0));

        auto tone = [&](double hz) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = std::sin(2.0 * 3.14159265358979323846 * hz * double(i) / fs);
            return x;
        };
        auto central_peak = [&](const std::vector<double>& y) {
            double peak = 0.0;
            for (std::size_t i = n / 4; i < 3 * n / 4; ++i) peak = std::max(peak, std::abs(y[i]));
            return peak;
        };
        const double hum = central_peak(butterworth_filtfilt(tone(20.0), fs, fc));
        const double slow = central_peak(butterworth_filtfilt(tone(0.5), fs, fc));

        const std::vector<double> x = tone(0.2);
        const auto y = butterworth_filtfilt(x, fs, fc);
        int best_lag = -1000;
        double best_corr = -1e300;
        for (int lag = -50; lag <= 50; ++lag) {
            double corr = 0.0;
            for (std::size_t i = 100; i + 100 < n; ++i)
                corr += x[i] * y[i + std::size_t(lag + 100) - 100];
            if (corr > best_corr) {
                best_corr = corr;
                best_lag = lag;
            }
        }

        const bool ok = dc_err <= 1e-6 && hum <= 0.005 && slow >= 0.99 && best_lag == 0;
        char detail[120];
        std::snprintf(detail, sizeof detail,
                      "DC err %.2e, 20 Hz residue %.4f, 0.5 Hz kept %.4f, lag %d samples", dc_err,
                      hum, slow, best_lag);
        report(3, label, ok, detail);
    } catch (const std::exception& e) {
        report(3, label, false, e.what());
    }
}

void criterion_4() {
    const char* label = "trial efficiency is exactly the power ratio of its summary";
    try {
        Rng rng(42);
        bool exact = true;
        for (int t = 0; t < 1000 && exact; ++t) {
            const double fz = rng.uniform(-10.0, 40.0);
            double tz = rng.uniform(-3.0, 3.0);
            if (tz == 0.0) tz = 0.7;
            const double omega = rng.uniform(0.05, 12.0);
            const double v = rng.uniform(-0.2, 0.6);
            const std::size_t len = 10 + std::size_t(rng.uniform(0.0, 400.0));

            TrialLog log;
            log.sample_rate_hz = 125.0;
            log.commanded_angle = AngleOfAttack(20.0);
            log.pos_m = std::vector<double>();
            for (std::size_t i = 0; i < len; ++i) {
                const double ts = double(i) / 125.0;
                log.t_s.push_back(ts);
                log.fx_N.push_back(0.0);
                log.fy_N.push_back(0.0);
                log.fz_N.push_back(fz);
                log.tx_Nm.push_back(0.0);
                log.ty_Nm.push_back(0.0);
                log.tz_Nm.push_back(tz);
                log.omega_rad_s.push_back(omega);
                log.pos_m->push_back(v * ts);
            }
            const TrialMetrics m = trial_metrics(log);
            exact = m.efficiency == locomotive_efficiency(m.f_thrust_max_N, m.v_avg_m_s,
                                                          m.tau_avg_Nm, m.omega_avg_rad_s);
        }

        // worked example: 0.2 m over 10 s, 5 N, 1 N*m, 2 rad/s
        TrialLog ref;
        ref.sample_rate_hz = 125.0;
        ref.commanded_angle = AngleOfAttack(20.0);
        ref.pos_m = std::vector<double>();
        for (std::size_t i = 0; i < 1251; ++i) {
            const double ts = double(i) / 125.0;
            ref.t_s.push_back(ts);
            ref.fx_N.push_back(0.0);
            ref.fy_N.push_back(0.0);
            ref.fz_N.push_back(5.0);
            ref.tx_Nm.push_back(0.0);
            ref.ty_Nm.push_back(0.0);
            ref.tz_Nm.push_back(1.0);
            ref.omega_rad_s.push_back(2.0);
            ref.pos_m->push_back(0.02 * ts);
        }
        const TrialMetrics m = trial_metrics(ref);
        const bool hand = std::abs(m.efficiency - 0.05) < 1e-12;

        char detail[80];
        std::snprintf(detail, sizeof detail, "identity %s, worked example eta %.6f",
                      exact ? "exact" : "broken", m.efficiency);
        report(4, label, exact && hand, detail);
    } catch (const std::exception& e) {
        report(4, label, false, e.what());
    }
}

bool strict_tradeoff(const MediaParams& m, std::string& why) {
    double prev_v = predict_velocity(m, 232.0, AngleOfAttack(10.0), 2.0);
    double prev_e = predict_efficiency(m, 232.0, AngleOfAttack(10.0), 2.0);
    for (int deg = 11; deg <= 35; ++deg) {
        const AngleOfAttack theta{static_cast<double>(deg)};
        const double v = predict_velocity(m, 232.0, theta, 2.0);
        const double e = predict_efficiency(m, 232.0, theta, 2.0);
        if (!(v > prev_v)) {
            why = m.name + ": velocity not increasing at " + std::to_string(deg) + " deg";
            return false;
        }
        if (!(e < prev_e)) {
            why = m.name + ": efficiency not decreasing at " + std::to_string(deg) + " deg";
            return false;
        }
        prev_v = v;
        prev_e = e;
    }
    return true;
}

void criterion_5(const fs::path& pipeline_dir, bool pipeline_ok) {
    const char* label = "speed rises and efficiency falls with the angle for every valid media";
    try {
        if (!pipeline_ok) {
            report(5, label, false, "pipeline artifacts unavailable");
            return;
        }
        std::vector<MediaParams> all =
            read_media_library_json(pipeline_dir / "media_library.json");
        const auto bundled =
            read_media_library_json(fs::path(VASCREW_DATA_DIR) / "example_media.json");
        all.insert(all.end(), bundled.begin(), bundled.end());

        int checked = 0;
        std::string why;
        bool ok = true;
        for (const auto& m : all) {
            const bool applies = m.thrust_scale_N > 0.0 && m.slip_slope_per_deg > 0.0 &&
                                 m.torque_slope_Nm_per_deg > 0.0 &&
                                 m.slip(AngleOfAttack(35.0)) < 1.0;
            if (!applies) continue;
            ++checked;
            if (!strict_tradeoff(m, why)) {
                ok = false;
                break;
            }
        }
        if (checked < 6) {
            ok = false;
            why = "only " + std::to_string(checked) + " media qualified";
        }
        report(5, label, ok,
               ok ? "checked " + std::to_string(checked) + " media at 1 deg steps" : why);
    } catch (const std::exception& e) {
        report(5, label, false, e.what());
    }
}

void criterion_6() {
    const char* label = "fitter round-trips generating parameters";
    try {
        MediaParams gen;
        gen.name = "gen";
        gen.slip_base = 0.2;
        gen.slip_slope_per_deg = 0.01;
        gen.thrust_scale_N = 10.0;
        gen.torque_base_Nm = 0.4;
        gen.torque_slope_Nm_per_deg = 0.6 / 22.5;

        auto observe = [&](double noise, std::uint64_t seed) {
            Rng rng(seed);
            std::vector<Observation> obs;
            for (double deg : {10.0, 15.0, 20.0, 25.0, 30.0, 35.0}) {
                Observation o;
                o.angle = AngleOfAttack(deg);
                o.omega_rad_s = 2.0;
                o.v_measured_m_s = predict_velocity(gen, 232.0, o.angle, 2.0) *
                                   (1.0 + noise * rng.gaussian());
                o.efficiency_measured = predict_efficiency(gen, 232.0, o.angle, 2.0) *
                                        (1.0 + noise * rng.gaussian());
                obs.push_back(o);
            }
            return obs;
        };
        auto rel_err = [&](const MediaParams& fit) {
            double worst = 0.0;
            worst = std::max(worst, std::abs(fit.slip_base - gen.slip_base) / gen.slip_base);
            worst = std::max(worst, std::abs(fit.slip_slope_per_deg - gen.slip_slope_per_deg) /
                                        gen.slip_slope_per_deg);
            worst = std::max(worst,
                             std::abs(fit.thrust_scale_N - gen.thrust_scale_N) / gen.thrust_scale_N);
            worst =
                std::max(worst, std::abs(fit.torque_base_Nm - gen.torque_base_Nm) / gen.torque_base_Nm);
            worst = std::max(worst, std::abs(fit.torque_slope_Nm_per_deg -
                                             gen.torque_slope_Nm_per_deg) /
                                        gen.torque_slope_Nm_per_deg);
            return worst;
        };

        const FitResult clean = fit_media(observe(0.0, 1), 232.0, "clean");
        const double clean_err = rel_err(clean.params);

        const FitResult noisy = fit_media(observe(0.02, 2024), 232.0, "noisy");
        const double noisy_err = rel_err(noisy.params);
        double sq = 0.0, ref_sq = 0.0;
        for (int deg = 10; deg <= 35; ++deg) {
            const AngleOfAttack theta{static_cast<double>(deg)};
            const double v_ref = predict_velocity(gen, 232.0, theta, 2.0);
            const double e_ref = predict_efficiency(gen, 232.0, theta, 2.0);
            const double dv = predict_velocity(noisy.params, 232.0, theta, 2.0) - v_ref;
            const double de = predict_efficiency(noisy.params, 232.0, theta, 2.0) - e_ref;
            sq += dv * dv + de * de;
            ref_sq += v_ref * v_ref + e_ref * e_ref;
        }
        const double pred_rms = std::sqrt(sq / ref_sq);

        const bool ok = clean_err <= 1e-3 && noisy_err <= 0.10 && pred_rms <= 0.05;
        char detail[120];
        std::snprintf(detail, sizeof detail,
                      "noiseless err %.2e, noisy err %.3f, prediction RMS %.3f", clean_err,
                      noisy_err, pred_rms);
        report(6, label, ok, detail);
    } catch (const std::exception& e) {
        report(6, label, false, e.what());
    }
}

void criterion_7() {
    const char* label = "planner agrees with a fine brute-force scan";
    try {
        Rng rng(77);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            MediaParams m;
            m.name = "probe";
            m.slip_base = rng.uniform(0.0, 0.5);
            m.slip_slope_per_deg = rng.uniform(0.0, 0.01);
            m.thrust_scale_N = rng.uniform(0.5, 20.0);
            m.torque_base_Nm = rng.uniform(0.05, 1.0);
            m.torque_slope_Nm_per_deg = rng.uniform(0.005, 0.1);
            const double omega = rng.uniform(0.5, 4.0);

            double v_max = 0.0, e_max = 0.0;
            for (int k = 0; k <= 2500; ++k) {
                const AngleOfAttack theta(10.0 + 0.01 * k);
                v_max = std::max(v_max, predict_velocity(m, 232.0, theta, omega));
                e_max = std::max(e_max, predict_efficiency(m, 232.0, theta, omega));
            }
            for (double w : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                double best_a = 10.0, best_s = -1.0;
                for (int k = 0; k <= 2500; ++k) {
                    const double a = 10.0 + 0.01 * k;
                    const AngleOfAttack theta(a);
                    double s = 0.0;
                    if (v_max > 0.0) s += w * predict_velocity(m, 232.0, theta, omega) / v_max;
                    if (e_max > 0.0)
                        s += (1.0 - w) * predict_efficiency(m, 232.0, theta, omega) / e_max;
                    if (s > best_s) {
                        best_s = s;
                        best_a = a;
                    }
                }
                const double planned = choose_angle(m, 232.0, omega, Objective{w}).angle_deg;
                worst = std::max(worst, std::abs(planned - best_a));
            }
        }
        char detail[80];
        std::snprintf(detail, sizeof detail, "max |planner - grid argmax| = %.4f deg", worst);
        report(7, label, worst <= 0.05, detail);
    } catch (const std::exception& e) {
        report(7, label, false, e.what());
    }
}

double peak_front_efficiency(const fs::path& pareto_csv) {
    std::istringstream in(read_file(pareto_csv));
    std::string line;
    std::getline(in, line);  // header
    double peak = -1e300;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto last_comma = line.rfind(',');
        peak = std::max(peak, parse_double(line.substr(last_comma + 1), pareto_csv.string()));
    }
    return peak;
}

void criterion_8(const fs::path& dir, bool pipeline_ok) {
    const char* label = "pipeline preserves the media efficiency ordering";
    try {
        if (!pipeline_ok) {
            report(8, label, false, "pipeline artifacts unavailable");
            return;
        }
        const double mud = peak_front_efficiency(dir / "pareto_mud.csv");
        const double big = peak_front_efficiency(dir / "pareto_big_gravel.csv");
        const double small = peak_front_efficiency(dir / "pareto_small_gravel.csv");

        const auto library = read_media_library_json(dir / "media_library.json");
        const MediaParams& sand = find_media(library, "sand");
        bool sand_slips = true;
        for (int deg = 10; deg <= 35; ++deg)
            sand_slips = sand_slips && sand.slip(AngleOfAttack(double(deg))) > 0.95;

        const bool ok = mud > big && big > small && small > 0.0 && sand_slips;
        char detail[120];
        std::snprintf(detail, sizeof detail,
                      "peak eta mud %.4f > big_gravel %.4f > small_gravel %.4f, sand slip %s",
                      mud, big, small, sand_slips ? ">0.95" : "too low");
        report(8, label, ok, detail);
    } catch (const std::exception& e) {
        report(8, label, false, e.what());
    }
}

void criterion_9(const fs::path& first_dir, bool pipeline_ok) {
    const char* label = "two pipeline runs are byte-identical";
    try {
        if (!pipeline_ok) {
            report(9, label, false, "pipeline artifacts unavailable");
            return;
        }
        const fs::path second_dir = scratch_root() / "pipeline_repeat";
        std::string why;
        if (!run_pipeline(second_dir, why)) {
            report(9, label, false, why);
            return;
        }
        bool identical = true;
        std::string first_diff;
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(first_dir))
            if (entry.is_regular_file()) files.push_back(fs::relative(entry.path(), first_dir));
        std::sort(files.begin(), files.end());
        for (const auto& rel : files) {
            if (!fs::exists(second_dir / rel) ||
                read_file(first_dir / rel) != read_file(second_dir / rel)) {
                identical = false;
                first_diff = rel.string();
                break;
            }
        }
        report(9, label, identical,
               identical ? "compared " + std::to_string(files.size()) + " files"
                         : "differs: " + first_diff);
    } catch (const std::exception& e) {
        report(9, label, false, e.what());
    }
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();

    const fs::path pipeline_dir = scratch_root() / "pipeline";
    std::string pipeline_why;
    const bool pipeline_ok = [&] {
        try {
            return run_pipeline(pipeline_dir, pipeline_why);
        } catch (const std::exception& e) {
            pipeline_why = e.what();
            return false;
        }
    }();

    criterion_5(pipeline_dir, pipeline_ok);
    criterion_6();
    criterion_7();
    criterion_8(pipeline_dir, pipeline_ok);
    criterion_9(pipeline_dir, pipeline_ok);

    if (failures == 0)
        std::puts("all 9 criteria passed");
    else
        std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
