#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "vascrew/errors.hpp"
#include "vascrew/planner.hpp"
#include "test_support.hpp"

using namespace vascrew;

namespace {

constexpr double kRadiusMm = 232.0;

MediaParams make_media(double sa, double sb, double f0, double c0, double c1,
                       const char* name = "test") {
    MediaParams m;
    m.name = name;
    m.slip_base = sa;
    m.slip_slope_per_deg = sb;
    m.thrust_scale_N = f0;
    m.torque_base_Nm = c0;
    m.torque_slope_Nm_per_deg = c1;
    return m;
}

MediaParams mud_like() { return make_media(0.10, 0.006, 7.0, 0.04, 0.96 / 22.5, "mud"); }

MediaParams stuck_media() { return make_media(1.0, 0.0, 0.0, 0.3, 0.01, "sand"); }

// Independent argmax of the planner's objective on its reference grid.
double brute_force_angle(const MediaParams& media, double omega, double w) {
    double v_max = 0.0, e_max = 0.0;
    for (int k = 0; k <= 2500; ++k) {
        const double a = 10.0 + 0.01 * k;
        const AngleOfAttack theta(a);
        v_max = std::max(v_max, predict_velocity(media, kRadiusMm, theta, omega));
        e_max = std::max(e_max, predict_efficiency(media, kRadiusMm, theta, omega));
    }
    double best_a = 10.0, best_s = -1.0;
    for (int k = 0; k <= 2500; ++k) {
        const double a = 10.0 + 0.01 * k;
        const AngleOfAttack theta(a);
        double s = 0.0;
        if (v_max > 0.0) s += w * predict_velocity(media, kRadiusMm, theta, omega) / v_max;
        if (e_max > 0.0) s += (1.0 - w) * predict_efficiency(media, kRadiusMm, theta, omega) / e_max;
        if (s > best_s) {
            best_s = s;
            best_a = a;
        }
    }
    return best_a;
}

}  // namespace

TEST_CASE("objective weight bounds") {
    CHECK_NOTHROW(Objective{0.0}.validate());
    CHECK_NOTHROW(Objective{1.0}.validate());
    CHECK_THROWS_AS(Objective{-0.1}.validate(), DomainError);
    CHECK_THROWS_AS(Objective{1.1}.validate(), DomainError);
}

TEST_CASE("frontier keeps every point of a strict trade-off") {
    const auto front = pareto_front(mud_like(), kRadiusMm, 2.0, 5.0);
    REQUIRE(front.size() == 6);
    for (std::size_t i = 0; i < front.size(); ++i) {
        CHECK(front[i].angle_deg == doctest::Approx(10.0 + 5.0 * double(i)));
        const AngleOfAttack theta(front[i].angle_deg);
        CHECK(front[i].velocity_m_s == predict_velocity(mud_like(), kRadiusMm, theta, 2.0));
        CHECK(front[i].efficiency == predict_efficiency(mud_like(), kRadiusMm, theta, 2.0));
    }
    for (std::size_t i = 1; i < front.size(); ++i) {
        CHECK(front[i].angle_deg > front[i - 1].angle_deg);
        CHECK(front[i].velocity_m_s > front[i - 1].velocity_m_s);
        CHECK(front[i].efficiency < front[i - 1].efficiency);
    }

    CHECK(pareto_front(mud_like(), kRadiusMm, 2.0, 1.0).size() == 26);
    CHECK(pareto_front(mud_like(), kRadiusMm, 2.0, 2.5).size() == 11);
}

TEST_CASE("non-divisor steps still include both endpoints") {
    const auto front = pareto_front(mud_like(), kRadiusMm, 2.0, 4.0);
    REQUIRE(front.size() == 8);
    CHECK(front.front().angle_deg == doctest::Approx(10.0));
    CHECK(front.back().angle_deg == doctest::Approx(35.0));
}

TEST_CASE("fully slipping media collapses to a single frontier point") {
    const auto front = pareto_front(stuck_media(), kRadiusMm, 2.0, 1.0);
    REQUIRE(front.size() == 1);
    CHECK(front[0].angle_deg == doctest::Approx(10.0));
    CHECK(front[0].velocity_m_s == 0.0);
    CHECK(front[0].efficiency == 0.0);
}

TEST_CASE("dominated low angles drop off the frontier") {
    // Flat torque line: both velocity and efficiency rise just above 10 deg,
    // so the lowest angles are strictly dominated.
    const MediaParams m = make_media(0.1, 0.001, 10.0, 1.0, 0.01);
    const auto front = pareto_front(m, kRadiusMm, 2.0, 1.0);
    CHECK(front.size() < 26);
    CHECK(front.front().angle_deg > 10.0);
}

TEST_CASE("no frontier point dominates another") {
    TestRng rng(909);
    for (int i = 0; i < 50; ++i) {
        const MediaParams m = make_media(rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.01),
                                         rng.uniform(0.5, 20.0), rng.uniform(0.05, 1.0),
                                         rng.uniform(0.005, 0.1));
        const auto front = pareto_front(m, kRadiusMm, rng.uniform(0.5, 4.0), 1.0);
        REQUIRE(!front.empty());
        for (std::size_t a = 0; a < front.size(); ++a)
            for (std::size_t b = 0; b < front.size(); ++b) {
                if (a == b) continue;
                const bool dominates =
                    front[a].velocity_m_s >= front[b].velocity_m_s &&
                    front[a].efficiency >= front[b].efficiency &&
                    (front[a].velocity_m_s > front[b].velocity_m_s ||
                     front[a].efficiency > front[b].efficiency);
                CHECK_FALSE(dominates);
            }
    }
}

TEST_CASE("frontier input guards") {
    CHECK_THROWS_AS(pareto_front(mud_like(), kRadiusMm, 2.0, 0.0), DomainError);
    CHECK_THROWS_AS(pareto_front(mud_like(), kRadiusMm, 2.0, -1.0), DomainError);
    CHECK_THROWS_AS(pareto_front(mud_like(), kRadiusMm, 2.0, 5.1), DomainError);
    CHECK_THROWS_AS(pareto_front(mud_like(), kRadiusMm, 0.0, 1.0), DomainError);
    MediaParams bad = mud_like();
    bad.slip_base = -0.2;
    CHECK_THROWS_AS(pareto_front(bad, kRadiusMm, 2.0, 1.0), DomainError);
}

TEST_CASE("pure-velocity and pure-efficiency weights pick the band edges") {
    const AnglePlan fast = choose_angle(mud_like(), kRadiusMm, 2.0, Objective{1.0});
    CHECK(fast.angle_deg == doctest::Approx(35.0).epsilon(1e-12));
    const AnglePlan thrifty = choose_angle(mud_like(), kRadiusMm, 2.0, Objective{0.0});
    CHECK(thrifty.angle_deg == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(fast.velocity_m_s > thrifty.velocity_m_s);
    CHECK(fast.efficiency < thrifty.efficiency);
}

TEST_CASE("a scoreless media falls back to the lowest angle") {
    const AnglePlan plan = choose_angle(stuck_media(), kRadiusMm, 2.0, Objective{0.5});
    CHECK(plan.angle_deg == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(plan.velocity_m_s == 0.0);
    CHECK(plan.efficiency == 0.0);
}

TEST_CASE("plan reports the predictor values at the chosen angle") {
    const AnglePlan plan = choose_angle(mud_like(), kRadiusMm, 2.0, Objective{0.3});
    const AngleOfAttack theta(plan.angle_deg);
    CHECK(plan.velocity_m_s == predict_velocity(mud_like(), kRadiusMm, theta, 2.0));
    CHECK(plan.efficiency == predict_efficiency(mud_like(), kRadiusMm, theta, 2.0));
}

TEST_CASE("choice is invariant to spin rate and to the torque/thrust gauge") {
    const MediaParams base = mud_like();
    MediaParams scaled = base;
    scaled.thrust_scale_N *= 7.5;
    scaled.torque_base_Nm *= 7.5;
    scaled.torque_slope_Nm_per_deg *= 7.5;

    for (double w : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double a1 = choose_angle(base, kRadiusMm, 2.0, Objective{w}).angle_deg;
        const double a2 = choose_angle(scaled, kRadiusMm, 2.0, Objective{w}).angle_deg;
        const double a3 = choose_angle(base, kRadiusMm, 0.7, Objective{w}).angle_deg;
        CHECK(std::abs(a1 - a2) <= 0.02);
        CHECK(std::abs(a1 - a3) <= 0.02);
    }
}

TEST_CASE("planner matches a fine brute-force scan") {
    TestRng rng(910);
    for (int i = 0; i < 10; ++i) {
        const MediaParams m = make_media(rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.01),
                                         rng.uniform(0.5, 20.0), rng.uniform(0.05, 1.0),
                                         rng.uniform(0.005, 0.1));
        const double omega = rng.uniform(0.5, 4.0);
        for (double w : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double planned = choose_angle(m, kRadiusMm, omega, Objective{w}).angle_deg;
            const double brute = brute_force_angle(m, omega, w);
            CHECK(std::abs(planned - brute) <= 0.05);
        }
    }
}

TEST_CASE("planner input guards") {
    CHECK_THROWS_AS(choose_angle(mud_like(), kRadiusMm, 0.0, Objective{0.5}), DomainError);
    CHECK_THROWS_AS(choose_angle(mud_like(), kRadiusMm, 2.0, Objective{1.5}), DomainError);
}

TEST_CASE("actuator command for in-travel angles") {
    const ScrewGeometry geo;
    const ActuatorCommand mid = angle_to_actuator_length(AngleOfAttack(30.0), geo);
    CHECK(mid.length_mm == doctest::Approx(81.0).epsilon(1e-12));
    CHECK_FALSE(mid.clamped);

    const ActuatorCommand low = angle_to_actuator_length(AngleOfAttack(10.0), geo);
    CHECK(low.length_mm == doctest::Approx(48.364817766693035).epsilon(1e-12));
    CHECK_FALSE(low.clamped);
}

TEST_CASE("actuator command clamps to the travel limits") {
    const ScrewGeometry geo;
    const ActuatorCommand top = angle_to_actuator_length(AngleOfAttack(35.0), geo);
    CHECK(top.length_mm == doctest::Approx(geo.max_length_mm));
    CHECK(top.clamped);

    ScrewGeometry tight = geo;
    tight.min_length_mm = 50.0;
    const ActuatorCommand bottom = angle_to_actuator_length(AngleOfAttack(10.0), tight);
    CHECK(bottom.length_mm == doctest::Approx(50.0));
    CHECK(bottom.clamped);
}

TEST_CASE("actuator command rejects out-of-band angles") {
    const ScrewGeometry geo;
    CHECK_THROWS_AS(angle_to_actuator_length(AngleOfAttack(9.5), geo), DomainError);
    CHECK_THROWS_AS(angle_to_actuator_length(AngleOfAttack(35.5), geo), DomainError);
}
