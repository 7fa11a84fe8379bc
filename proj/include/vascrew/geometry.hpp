#pragma once

#include <string>

namespace vascrew {

/// Physical constants of one variable-angle screw unit.
///
/// The blade angle of attack is set by stretching or compressing the unit
/// along its axis: a strut of length `strut_length_l_mm` pivots between the
/// two end plates, so the inner plate distance d relates to the blade angle
/// through d = d0 + l*sin(theta). All lengths are millimeters.
struct ScrewGeometry {
    double root_radius_mm = 192.0;
    double outer_radius_mm = 272.0;
    double plate_offset_d0_mm = 31.0;
    double strut_length_l_mm = 100.0;
    double min_length_mm = 48.0;
    double max_length_mm = 88.0;
    int thread_starts = 6;

    /// Throws DomainError if any invariant is violated:
    /// 0 < root < outer radius, positive d0 and l, thread_starts >= 1,
    /// d0 <= min_length < max_length <= d0 + l.
    void validate() const;

    /// Midpoint of root and outer radius; default lever arm for advance
    /// computations when the caller has no better estimate of where along
    /// the blade thrust acts.
    double mean_blade_radius_mm() const {
        return 0.5 * (root_radius_mm + outer_radius_mm);
    }
};

/// Blade lead angle in degrees.
///
/// Mathematical domain is [0, 90); construction fails outside it. The
/// hardware can only command [10, 35] degrees, tracked as a separate
/// operational flag so analysis code may still evaluate angles the
/// actuator cannot reach.
class AngleOfAttack {
public:
    /// Throws DomainError unless 0 <= degrees < 90.
    explicit AngleOfAttack(double degrees);

    double degrees() const { return degrees_; }
    double radians() const;

    /// True iff the angle lies inside the commandable range [10, 35] deg.
    bool is_operational() const {
        return degrees_ >= kMinOperationalDeg && degrees_ <= kMaxOperationalDeg;
    }

    static constexpr double kMinOperationalDeg = 10.0;
    static constexpr double kMaxOperationalDeg = 35.0;

private:
    double degrees_;
};

}  // namespace vascrew
