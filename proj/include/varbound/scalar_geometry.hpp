#ifndef VARBOUND_SCALAR_GEOMETRY_HPP
#define VARBOUND_SCALAR_GEOMETRY_HPP

#include "varbound/matrix.hpp"

#include <span>
#include <vector>

namespace varbound {

/// Finite complex values x_i, treated as a multiset. Non-empty.
class PointSet {
public:
    explicit PointSet(std::vector<cplx> points);
    static PointSet real(std::span<const double> values);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<cplx>& points() const noexcept { return points_; }
    cplx operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<cplx> points_;
};

/// Probabilities p_i. Entries down to -1e-12 are clamped to zero and the sum
/// must be within 1e-10 of one.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> probs);
    static ProbVector point_mass(std::size_t n, std::size_t at);
    static ProbVector uniform(std::size_t n);

    std::size_t size() const noexcept { return probs_.size(); }
    const std::vector<double>& probs() const noexcept { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

struct Circle {
    cplx center;
    double radius;
    /// Indices of the 1-3 points that determine the circle.
    std::vector<std::size_t> support;
};

/// sum_i p_i |x_i - mu|^2 with mu = sum_j p_j x_j.
double variance(const PointSet& points, const ProbVector& probs);
cplx mean(const PointSet& points, const ProbVector& probs);

/// (M - m)^2 / 4
double murthy_sethi_bound(double m, double M);

/// Smallest circle containing every point (iterative move-to-front Welzl).
Circle enclosing_circle(const PointSet& points);

struct MaxVarianceDistribution {
    ProbVector probs;
    double value;
};

/// A distribution attaining max_p Var: supported on the circle's support set,
/// weighted by the barycentric coordinates of the center.
MaxVarianceDistribution max_variance_distribution(const PointSet& points);

/// ((a_1^p + a_2^p)/2)^(1/p) where a_1 >= a_2 are the two largest |x_i - z|.
double two_largest_objective(const PointSet& points, cplx z, double p);

struct TwoLargestRadius {
    cplx z_star;
    double value;
    /// min over ring probes of objective(probe) - objective(z_star); >= 0 is
    /// the local-minimality witness.
    double ring_margin;
};

TwoLargestRadius two_largest_radius(const PointSet& points, double p);

}  // namespace varbound

#endif
