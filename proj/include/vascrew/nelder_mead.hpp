#pragma once

#include <functional>
#include <vector>

namespace vascrew {

struct NelderMeadResult {
    std::vector<double> x;
    double fmin = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    int max_iterations = 2000;
    /// Convergence: simplex diameter below this, measured in scale units.
    double diameter_tol = 1e-8;
    /// Initial vertex offset along each axis, in scale units.
    double initial_step = 0.25;
};

/// Derivative-free simplex minimizer with box constraints enforced by
/// projection. Deterministic: the simplex is built from x0 by stepping each
/// coordinate, and every run of the same inputs takes the same path.
/// `scales` sets the per-coordinate unit used for the initial steps and the
/// convergence diameter; lower/upper bound the search box (use +-inf for
/// unbounded coordinates).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& scales,
                             const std::vector<double>& lower, const std::vector<double>& upper,
                             const NelderMeadOptions& options = {});

}  // namespace vascrew
