#include "vascrew/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vascrew/errors.hpp"
#include "vascrew/kinematics.hpp"

namespace vascrew {

namespace {

constexpr double kLoDeg = AngleOfAttack::kMinOperationalDeg;
constexpr double kHiDeg = AngleOfAttack::kMaxOperationalDeg;

}  // namespace

void Objective::validate() const {
    if (!(velocity_weight >= 0.0 && velocity_weight <= 1.0))
        throw DomainError("velocity weight " + std::to_string(velocity_weight) +
                          " outside [0, 1]");
}

std::vector<ParetoPoint> pareto_front(const MediaParams& media, double effective_radius_mm,
                                      double omega_rad_s, double grid_step_deg) {
    if (!(grid_step_deg > 0.0 && grid_step_deg <= 5.0))
        throw DomainError("grid step must lie in (0, 5] deg");
    if (!(omega_rad_s > 0.0)) throw DomainError("pareto front needs omega > 0");
    media.validate();

    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double a = kLoDeg + k * grid_step_deg;
        if (a > kHiDeg + 1e-9) break;
        grid.push_back(std::min(a, kHiDeg));
    }
    if (std::abs(grid.back() - kHiDeg) > 1e-9) grid.push_back(kHiDeg);

    std::vector<ParetoPoint> pts;
    for (double a : grid) {
        const AngleOfAttack theta(a);
        pts.push_back({a, predict_velocity(media, effective_radius_mm, theta, omega_rad_s),
                       predict_efficiency(media, effective_radius_mm, theta, omega_rad_s)});
    }

    // Exact duplicates collapse to their lowest angle (grid is ascending),
    // then dominated points drop out.
    std::vector<ParetoPoint> unique;
    for (const auto& p : pts) {
        const bool seen = std::any_of(unique.begin(), unique.end(), [&](const ParetoPoint& q) {
            return q.velocity_m_s == p.velocity_m_s && q.efficiency == p.efficiency;
        });
        if (!seen) unique.push_back(p);
    }
    std::vector<ParetoPoint> front;
    for (const auto& p : unique) {
        const bool dominated = std::any_of(unique.begin(), unique.end(), [&](const ParetoPoint& q) {
            return (q.velocity_m_s >= p.velocity_m_s && q.efficiency >= p.efficiency) &&
                   (q.velocity_m_s > p.velocity_m_s || q.efficiency > p.efficiency);
        });
        if (!dominated) front.push_back(p);
    }
    std::sort(front.begin(), front.end(),
              [](const ParetoPoint& a, const ParetoPoint& b) { return a.angle_deg < b.angle_deg; });
    return front;
}

AnglePlan choose_angle(const MediaParams& media, double effective_radius_mm, double omega_rad_s,
                       const Objective& objective) {
    objective.validate();
    if (!(omega_rad_s > 0.0)) throw DomainError("planning needs omega > 0");
    media.validate();

    auto velocity = [&](double deg) {
        return predict_velocity(media, effective_radius_mm, AngleOfAttack(deg), omega_rad_s);
    };
    auto efficiency = [&](double deg) {
        return predict_efficiency(media, effective_radius_mm, AngleOfAttack(deg), omega_rad_s);
    };

    // Channel maxima over the interval, from a fine fixed grid so the
    // normalization is deterministic.
    double v_max = -std::numeric_limits<double>::infinity();
    double e_max = -std::numeric_limits<double>::infinity();
    constexpr double kFine = 0.01;
    const int n_fine = static_cast<int>(std::lround((kHiDeg - kLoDeg) / kFine));
    for (int k = 0; k <= n_fine; ++k) {
        const double a = std::min(kLoDeg + k * kFine, kHiDeg);
        v_max = std::max(v_max, velocity(a));
        e_max = std::max(e_max, efficiency(a));
    }

    const double w = objective.velocity_weight;
    auto score = [&](double deg) {
        double s = 0.0;
        if (v_max > 0.0) s += w * velocity(deg) / v_max;
        if (e_max > 0.0) s += (1.0 - w) * efficiency(deg) / e_max;
        return s;
    };

    // Coarse scan; first strictly-better point wins so ties fall to the
    // lower angle.
    double best_deg = kLoDeg;
    double best_score = score(kLoDeg);
    for (int k = 1;; ++k) {
        const double a = kLoDeg + 0.5 * k;
        if (a > kHiDeg + 1e-9) break;
        const double s = score(std::min(a, kHiDeg));
        if (s > best_score) {
            best_score = s;
            best_deg = std::min(a, kHiDeg);
        }
    }

    // Golden-section refinement of the winning bracket.
    double lo = std::max(kLoDeg, best_deg - 0.5);
    double hi = std::min(kHiDeg, best_deg + 0.5);
    constexpr double kInvPhi = 0.6180339887498949;
    double a = hi - kInvPhi * (hi - lo);
    double b = lo + kInvPhi * (hi - lo);
    double fa = score(a), fb = score(b);
    while (hi - lo > 0.01) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + kInvPhi * (hi - lo);
            fb = score(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - kInvPhi * (hi - lo);
            fa = score(a);
        }
    }

    // Pick among the refined candidates and the bracket ends; on ties keep
    // the lowest angle.
    const double candidates[] = {std::max(kLoDeg, best_deg - 0.5), a, b, 0.5 * (lo + hi),
                                 best_deg, std::min(kHiDeg, best_deg + 0.5)};
    double win_deg = best_deg, win_score = best_score;
    for (double c : candidates) {
        const double s = score(c);
        if (s > win_score || (s == win_score && c < win_deg)) {
            win_score = s;
            win_deg = c;
        }
    }

    return AnglePlan{win_deg, velocity(win_deg), efficiency(win_deg)};
}

ActuatorCommand angle_to_actuator_length(const AngleOfAttack& theta,
                                         const ScrewGeometry& geometry) {
    if (!theta.is_operational())
        throw DomainError("angle " + std::to_string(theta.degrees()) +
                          " deg outside the commandable range [10, 35]");
    const double raw = length_from_angle(geometry, theta);
    const double clamped = std::clamp(raw, geometry.min_length_mm, geometry.max_length_mm);
    return ActuatorCommand{clamped, clamped != raw};
}

}  // namespace vascrew
