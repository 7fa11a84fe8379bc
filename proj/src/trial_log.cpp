#include "vascrew/trial_log.hpp"

#include <cmath>
#include <string>

#include "vascrew/errors.hpp"

namespace vascrew {

void BaselinePair::validate() const {
    for (double v : free_hanging)
        if (!std::isfinite(v)) throw DomainError("non-finite free_hanging baseline entry");
    for (double v : set_down)
        if (!std::isfinite(v)) throw DomainError("non-finite set_down baseline entry");
}

std::array<double, 6> baseline_drift(const BaselinePair& prev, const BaselinePair& cur) {
    std::array<double, 6> d{};
    for (std::size_t i = 0; i < 6; ++i) d[i] = cur.free_hanging[i] - prev.free_hanging[i];
    return d;
}

void TrialLog::validate() const {
    const std::size_t n = t_s.size();
    if (n < 2) throw DomainError("trial log needs at least 2 samples");
    const std::vector<double>* channels[] = {&fx_N, &fy_N, &fz_N, &tx_Nm, &ty_Nm, &tz_Nm, &omega_rad_s};
    for (const auto* c : channels)
        if (c->size() != n) throw DomainError("trial log channel length mismatch");
    if (pos_m && pos_m->size() != n)
        throw DomainError("trial log position channel length mismatch");
    if (!(sample_rate_hz > 0.0)) throw DomainError("sample rate must be > 0 Hz");

    const double dt_nominal = 1.0 / sample_rate_hz;
    for (std::size_t i = 1; i < n; ++i) {
        const double dt = t_s[i] - t_s[i - 1];
        if (!(dt > 0.0))
            throw DomainError("timestamps not strictly increasing at sample " + std::to_string(i));
        if (std::abs(dt - dt_nominal) > 0.01 * dt_nominal)
            throw DomainError("timestamp jitter above 1% of 1/sample_rate at sample " +
                              std::to_string(i));
    }
}

TrialLog TrialLog::slice(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > size())
        throw DomainError("invalid slice [" + std::to_string(begin) + ", " +
                          std::to_string(end) + ") of log with " + std::to_string(size()) +
                          " samples");
    auto cut = [&](const std::vector<double>& v) {
        return std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(begin),
                                   v.begin() + static_cast<std::ptrdiff_t>(end));
    };
    TrialLog out;
    out.sample_rate_hz = sample_rate_hz;
    out.t_s = cut(t_s);
    out.fx_N = cut(fx_N);
    out.fy_N = cut(fy_N);
    out.fz_N = cut(fz_N);
    out.tx_Nm = cut(tx_Nm);
    out.ty_Nm = cut(ty_Nm);
    out.tz_Nm = cut(tz_Nm);
    out.omega_rad_s = cut(omega_rad_s);
    if (pos_m) out.pos_m = cut(*pos_m);
    out.media_name = media_name;
    out.commanded_angle = commanded_angle;
    return out;
}

}  // namespace vascrew
