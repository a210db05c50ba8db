#ifndef VARBOUND_CONVEX2D_HPP
#define VARBOUND_CONVEX2D_HPP

#include "varbound/matrix.hpp"

#include <functional>

namespace varbound {

/// Value and a subgradient of a convex function on the plane; the complex
/// gradient packs (d/dRe, d/dIm).
struct ConvexSample {
    double value;
    cplx subgradient;
};

struct ConvexMinimum {
    cplx point;
    double value;
    /// Certified lower bound on the minimum, valid when the minimizer lies in
    /// the initial disk.
    double lower_bound;
    int iterations;
    bool converged;
};

struct Convex2dOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-13;
    int max_iterations = 4000;
};

//
// Central-cut ellipsoid method in two dimensions. Starts from the disk
// |z - center| <= radius, which must contain a minimizer. Stops when the
// certified gap drops below abs_tol + rel_tol * (1 + |best|) or the ellipsoid
// has collapsed to rounding level.
//
ConvexMinimum minimize_convex_2d(const std::function<ConvexSample(cplx)>& f, cplx center, double radius,
                                 const Convex2dOptions& options = {});

}  // namespace varbound

#endif
