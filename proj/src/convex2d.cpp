#include "varbound/convex2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace varbound {

ConvexMinimum minimize_convex_2d(const std::function<ConvexSample(cplx)>& f, cplx center, double radius,
                                 const Convex2dOptions& options) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("initial search radius must be positive and finite");
    }
    // ellipsoid {z : (z-x)^T P^{-1} (z-x) <= 1}, P symmetric positive definite
    double x0 = center.real(), x1 = center.imag();
    double p00 = radius * radius, p01 = 0.0, p11 = radius * radius;
    constexpr double n = 2.0;
    const double expand = n * n / (n * n - 1.0);

    ConvexMinimum best{center, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0,
                       false};
    const double scale = std::max(radius, std::abs(center));

    for (int it = 0; it < options.max_iterations; ++it) {
        best.iterations = it + 1;
        const cplx z(x0, x1);
        const auto s = f(z);
        if (s.value < best.value) {
            best.value = s.value;
            best.point = z;
        }
        const double g0 = s.subgradient.real(), g1 = s.subgradient.imag();
        const double pg0 = p00 * g0 + p01 * g1;
        const double pg1 = p01 * g0 + p11 * g1;
        const double gpg = g0 * pg0 + g1 * pg1;
        if (!(gpg > 0.0)) {
            // zero subgradient: z is a minimizer
            best.lower_bound = std::max(best.lower_bound, s.value);
            best.converged = true;
            break;
        }
        const double width = std::sqrt(gpg);
        best.lower_bound = std::max(best.lower_bound, s.value - width);
        if (best.value - best.lower_bound <= options.abs_tol + options.rel_tol * (1.0 + std::abs(best.value))) {
            best.converged = true;
            break;
        }
        const double axis = std::sqrt(std::max(p00, p11));
        if (axis <= 1e-15 * scale) {
            // rounding level; function noise dominates further cuts
            best.converged = true;
            break;
        }
        const double h0 = pg0 / width, h1 = pg1 / width;
        x0 -= h0 / (n + 1.0);
        x1 -= h1 / (n + 1.0);
        const double c = 2.0 / (n + 1.0);
        p00 = expand * (p00 - c * h0 * h0);
        p01 = expand * (p01 - c * h0 * h1);
        p11 = expand * (p11 - c * h1 * h1);
    }
    return best;
}

}  // namespace varbound
