#include "vascrew/signal_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vascrew/errors.hpp"

namespace vascrew {

namespace {

constexpr double kGravity = 9.81;  // m/s^2, value used throughout the data set

// Second-order Butterworth low-pass as a biquad, bilinear transform with
// cutoff prewarping. a0 is normalized to 1.
struct Biquad {
    double b0, b1, b2, a1, a2;
};

Biquad butterworth_coeffs(double sample_rate_hz, double cutoff_hz) {
    const double warped = std::tan(M_PI * cutoff_hz / sample_rate_hz);
    const double k1 = std::sqrt(2.0) * warped;
    const double k2 = warped * warped;
    const double a0 = 1.0 + k1 + k2;
    return Biquad{k2 / a0, 2.0 * k2 / a0, k2 / a0, 2.0 * (k2 - 1.0) / a0,
                  (1.0 - k1 + k2) / a0};
}

// Direct form II transposed, with state preset to the step steady state for
// input level x0 (the analogue of scipy's lfilter_zi scaled by x0). With
// this initialization a constant input yields a constant output.
std::vector<double> run_forward(const Biquad& c, const std::vector<double>& x, double x0) {
    const double dc = (c.b0 + c.b1 + c.b2) / (1.0 + c.a1 + c.a2);
    double z2 = (c.b2 - c.a2 * dc) * x0;
    double z1 = (c.b1 - c.a1 * dc) * x0 + z2;
    std::vector<double> y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double yn = c.b0 * x[n] + z1;
        z1 = c.b1 * x[n] - c.a1 * yn + z2;
        z2 = c.b2 * x[n] - c.a2 * yn;
        y[n] = yn;
    }
    return y;
}

}  // namespace

std::vector<double> butterworth_filtfilt(const std::vector<double>& x, double sample_rate_hz,
                                         double cutoff_hz) {
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_rate_hz))
        throw DomainError("cutoff " + std::to_string(cutoff_hz) +
                          " Hz must lie in (0, sample_rate/2)");
    if (x.size() < 2) throw DomainError("filtfilt needs at least 2 samples");

    const Biquad c = butterworth_coeffs(sample_rate_hz, cutoff_hz);

    // Odd reflection about the end samples, one settling length (three
    // cutoff periods) each side, capped by the signal length.
    const std::size_t n = x.size();
    const auto pad = std::min<std::size_t>(
        n - 1, static_cast<std::size_t>(std::ceil(3.0 * sample_rate_hz / cutoff_hz)));
    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

    std::vector<double> y = run_forward(c, ext, ext.front());
    std::reverse(y.begin(), y.end());
    y = run_forward(c, y, y.front());
    std::reverse(y.begin(), y.end());

    return std::vector<double>(y.begin() + static_cast<std::ptrdiff_t>(pad),
                               y.begin() + static_cast<std::ptrdiff_t>(pad + n));
}

TrialLog tare(const TrialLog& log, const BaselinePair& baseline) {
    log.validate();
    baseline.validate();
    TrialLog out = log;
    std::vector<double>* channels[] = {&out.fx_N, &out.fy_N, &out.fz_N,
                                       &out.tx_Nm, &out.ty_Nm, &out.tz_Nm};
    for (std::size_t c = 0; c < 6; ++c)
        for (double& v : *channels[c]) v -= baseline.set_down[c];
    return out;
}

TrialLog lowpass(const TrialLog& log, double cutoff_hz) {
    log.validate();
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * log.sample_rate_hz))
        throw DomainError("cutoff " + std::to_string(cutoff_hz) + " Hz at or above Nyquist of " +
                          std::to_string(log.sample_rate_hz) + " Hz log");
    TrialLog out = log;
    std::vector<double>* channels[] = {&out.fx_N, &out.fy_N, &out.fz_N,  &out.tx_Nm,
                                       &out.ty_Nm, &out.tz_Nm, &out.omega_rad_s};
    for (auto* c : channels) *c = butterworth_filtfilt(*c, log.sample_rate_hz, cutoff_hz);
    return out;
}

std::pair<std::size_t, std::size_t> steady_state_range(const TrialLog& log) {
    log.validate();
    std::vector<double> sorted = log.omega_rad_s;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median =
        (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double threshold = 0.9 * median;
    if (!(median > 0.0))
        throw DataError("no steady state: trial median angular velocity is not positive");

    std::size_t first = n, last = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (log.omega_rad_s[i] >= threshold) {
            if (first == n) first = i;
            last = i;
        }
    }
    if (first == n) throw DataError("no steady state: angular velocity never reaches 90% of median");

    const auto guard = static_cast<std::size_t>(std::ceil(0.5 * log.sample_rate_hz));
    if (last < first + 2 * guard + 1)
        throw DataError("no steady state: plateau shorter than the 0.5 s guard bands");
    return {first + guard, last - guard + 1};
}

TrialLog clip_steady_state(const TrialLog& log,
                           std::optional<std::pair<std::size_t, std::size_t>> manual_range) {
    if (manual_range) {
        const auto [begin, end] = *manual_range;
        if (!(begin < end && end <= log.size()))
            throw DomainError("manual clip range [" + std::to_string(begin) + ", " +
                              std::to_string(end) + ") invalid for log of " +
                              std::to_string(log.size()) + " samples");
        return log.slice(begin, end);
    }
    const auto [begin, end] = steady_state_range(log);
    return log.slice(begin, end);
}

double gravity_augment(double force_x_N, double effective_mass_kg) {
    if (!std::isfinite(force_x_N)) throw DomainError("non-finite force");
    if (!(effective_mass_kg >= 0.0)) throw DomainError("effective mass must be >= 0 kg");
    return force_x_N + effective_mass_kg * kGravity;
}

}  // namespace vascrew
