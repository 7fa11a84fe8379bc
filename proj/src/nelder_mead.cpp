#include "vascrew/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

#include "vascrew/errors.hpp"

namespace vascrew {

namespace {

void project(std::vector<double>& x, const std::vector<double>& lower,
             const std::vector<double>& upper) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& scales,
                             const std::vector<double>& lower, const std::vector<double>& upper,
                             const NelderMeadOptions& options) {
    const std::size_t dim = x0.size();
    if (dim == 0 || scales.size() != dim || lower.size() != dim || upper.size() != dim)
        throw DomainError("nelder_mead: inconsistent problem dimensions");

    // Reflection/expansion/contraction/shrink coefficients, standard values.
    constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;

    std::vector<std::vector<double>> vertex(dim + 1, x0);
    for (std::size_t j = 0; j < dim; ++j) {
        double step = options.initial_step * scales[j];
        // Step inward when the boundary would swallow the offset.
        if (vertex[j + 1][j] + step > upper[j]) step = -step;
        vertex[j + 1][j] += step;
        project(vertex[j + 1], lower, upper);
    }
    std::vector<double> fval(dim + 1);
    for (std::size_t j = 0; j <= dim; ++j) fval[j] = f(vertex[j]);

    auto order = [&] {
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fval[a] < fval[b]; });
        std::vector<std::vector<double>> v2(dim + 1);
        std::vector<double> f2(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            v2[i] = vertex[idx[i]];
            f2[i] = fval[idx[i]];
        }
        vertex.swap(v2);
        fval.swap(f2);
    };

    auto diameter = [&] {
        double d = 0.0;
        for (std::size_t j = 1; j <= dim; ++j)
            for (std::size_t i = 0; i < dim; ++i)
                d = std::max(d, std::abs(vertex[j][i] - vertex[0][i]) / scales[i]);
        return d;
    };

    NelderMeadResult result;
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        order();
        if (diameter() < options.diameter_tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += vertex[j][i] / double(dim);

        auto blend = [&](double coeff) {
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i)
                p[i] = centroid[i] + coeff * (centroid[i] - vertex[dim][i]);
            project(p, lower, upper);
            return p;
        };

        std::vector<double> reflected = blend(kAlpha);
        const double f_reflected = f(reflected);

        if (f_reflected < fval[0]) {
            std::vector<double> expanded = blend(kGamma);
            const double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                vertex[dim] = std::move(expanded);
                fval[dim] = f_expanded;
            } else {
                vertex[dim] = std::move(reflected);
                fval[dim] = f_reflected;
            }
        } else if (f_reflected < fval[dim - 1]) {
            vertex[dim] = std::move(reflected);
            fval[dim] = f_reflected;
        } else {
            const bool outside = f_reflected < fval[dim];
            std::vector<double> contracted = blend(outside ? kRho : -kRho);
            const double f_contracted = f(contracted);
            if (f_contracted < (outside ? f_reflected : fval[dim])) {
                vertex[dim] = std::move(contracted);
                fval[dim] = f_contracted;
            } else {
                for (std::size_t j = 1; j <= dim; ++j) {
                    for (std::size_t i = 0; i < dim; ++i)
                        vertex[j][i] = vertex[0][i] + kSigma * (vertex[j][i] - vertex[0][i]);
                    project(vertex[j], lower, upper);
                    fval[j] = f(vertex[j]);
                }
            }
        }
    }

    order();
    result.x = vertex[0];
    result.fmin = fval[0];
    result.iterations = iter;
    return result;
}

}  // namespace vascrew
