#include "varbound/scalar_geometry.hpp"

#include "varbound/convex2d.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace varbound {

namespace {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

Circle circle_from(const std::vector<cplx>& x, std::size_t i, std::size_t j) {
    const cplx c = 0.5 * (x[i] + x[j]);
    return {c, std::max(std::abs(x[i] - c), std::abs(x[j] - c)), {i, j}};
}

Circle circle_from(const std::vector<cplx>& x, std::size_t i, std::size_t j, std::size_t k) {
    const cplx a = x[j] - x[i];
    const cplx b = x[k] - x[i];
    const double d = 2.0 * cross(a, b);
    if (std::abs(d) <= 1e-14 * std::abs(a) * std::abs(b)) {
        // collinear: the diameter circle of the farthest pair
        const double ab = std::abs(a), ac = std::abs(b), bc = std::abs(x[k] - x[j]);
        if (ab >= ac && ab >= bc) return circle_from(x, i, j);
        if (ac >= bc) return circle_from(x, i, k);
        return circle_from(x, j, k);
    }
    const cplx u = cplx(0.0, -1.0) * (std::norm(a) * b - std::norm(b) * a) / d;
    const cplx c = x[i] + u;
    const double r = std::max({std::abs(x[i] - c), std::abs(x[j] - c), std::abs(x[k] - c)});
    return {c, r, {i, j, k}};
}

// barycentric coordinates of z with respect to triangle (a, b, c)
std::array<double, 3> barycentric(cplx z, cplx a, cplx b, cplx c) {
    const double area = cross(b - a, c - a);
    const double l2 = cross(z - a, c - a) / area;
    const double l3 = cross(b - a, z - a) / area;
    return {1.0 - l2 - l3, l2, l3};
}

}  // namespace

PointSet::PointSet(std::vector<cplx> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("point set must be non-empty");
    for (const auto& z : points_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("point set entries must be finite");
        }
    }
}

PointSet PointSet::real(std::span<const double> values) {
    return PointSet(std::vector<cplx>(values.begin(), values.end()));
}

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("probability vector must be non-empty");
    double sum = 0.0;
    for (auto& p : probs_) {
        if (!std::isfinite(p) || p < -1e-12) throw std::invalid_argument("probabilities must be non-negative");
        p = std::max(p, 0.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("probabilities must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

ProbVector ProbVector::point_mass(std::size_t n, std::size_t at) {
    std::vector<double> p(n, 0.0);
    p.at(at) = 1.0;
    return ProbVector(std::move(p));
}

ProbVector ProbVector::uniform(std::size_t n) {
    return ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

cplx mean(const PointSet& points, const ProbVector& probs) {
    if (points.size() != probs.size()) throw std::invalid_argument("points and probabilities differ in length");
    cplx mu = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) mu += probs[i] * points[i];
    return mu;
}

double variance(const PointSet& points, const ProbVector& probs) {
    const cplx mu = mean(points, probs);
    double v = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) v += probs[i] * std::norm(points[i] - mu);
    return std::max(v, 0.0);
}

double murthy_sethi_bound(double m, double M) {
    if (m > M) throw std::invalid_argument("Murthy-Sethi bound needs m <= M");
    return 0.25 * (M - m) * (M - m);
}

Circle enclosing_circle(const PointSet& points) {
    const auto& x = points.points();
    const std::size_t n = x.size();
    double scale = 1.0;
    for (const auto& z : x) scale = std::max(scale, std::abs(z));
    const double slack = 1e-14 * scale;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 shuffle_rng(0x5eedc1c1eULL);
    std::shuffle(order.begin(), order.end(), shuffle_rng);

    auto outside = [&](const Circle& c, std::size_t i) { return std::abs(x[i] - c.center) > c.radius + slack; };

    Circle c{x[order[0]], 0.0, {order[0]}};
    for (std::size_t a = 1; a < n; ++a) {
        const std::size_t i = order[a];
        if (!outside(c, i)) continue;
        c = {x[i], 0.0, {i}};
        for (std::size_t b = 0; b < a; ++b) {
            const std::size_t j = order[b];
            if (!outside(c, j)) continue;
            c = circle_from(x, i, j);
            for (std::size_t e = 0; e < b; ++e) {
                const std::size_t k = order[e];
                if (!outside(c, k)) continue;
                c = circle_from(x, i, j, k);
            }
        }
    }
    // make containment exact at the reported radius
    for (const auto& z : x) c.radius = std::max(c.radius, std::abs(z - c.center));
    std::sort(c.support.begin(), c.support.end());
    return c;
}

MaxVarianceDistribution max_variance_distribution(const PointSet& points) {
    const auto& x = points.points();
    const std::size_t n = x.size();
    const Circle circle = enclosing_circle(points);
    std::vector<double> p(n, 0.0);

    auto finish = [&](std::vector<double> w) {
        ProbVector probs(std::move(w));
        const double v = variance(points, probs);
        return MaxVarianceDistribution{std::move(probs), v};
    };

    if (circle.radius == 0.0 || circle.support.size() == 1) {
        p[circle.support.front()] = 1.0;
        return finish(std::move(p));
    }
    if (circle.support.size() == 2) {
        p[circle.support[0]] = 0.5;
        p[circle.support[1]] = 0.5;
        return finish(std::move(p));
    }

    const auto& s = circle.support;
    auto w = barycentric(circle.center, x[s[0]], x[s[1]], x[s[2]]);
    if (*std::min_element(w.begin(), w.end()) >= -1e-9) {
        for (int k = 0; k < 3; ++k) p[s[k]] = std::max(w[k], 0.0);
    } else {
        // support triangle does not contain the center: search the boundary points
        // for a pair or triangle that does
        std::vector<std::size_t> boundary;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(x[i] - circle.center) >= circle.radius * (1.0 - 1e-9)) boundary.push_back(i);
        double best_err = std::numeric_limits<double>::infinity();
        std::vector<std::pair<std::size_t, double>> best;
        for (std::size_t a = 0; a < boundary.size(); ++a)
            for (std::size_t b = a + 1; b < boundary.size(); ++b) {
                const std::size_t i = boundary[a], j = boundary[b];
                const double err = std::abs(0.5 * (x[i] + x[j]) - circle.center);
                if (err < best_err) {
                    best_err = err;
                    best = {{i, 0.5}, {j, 0.5}};
                }
                for (std::size_t c = b + 1; c < boundary.size(); ++c) {
                    const std::size_t k = boundary[c];
                    if (std::abs(cross(x[j] - x[i], x[k] - x[i])) == 0.0) continue;
                    auto l = barycentric(circle.center, x[i], x[j], x[k]);
                    const double neg = -std::min({l[0], l[1], l[2], 0.0});
                    if (neg < best_err) {
                        best_err = neg;
                        best = {{i, l[0]}, {j, l[1]}, {k, l[2]}};
                    }
                }
            }
        double total = 0.0;
        for (auto& [i, wi] : best) total += std::max(wi, 0.0);
        for (auto& [i, wi] : best) p[i] = std::max(wi, 0.0) / total;
    }
    double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& v : p) v /= total;
    return finish(std::move(p));
}

double two_largest_objective(const PointSet& points, cplx z, double p) {
    if (points.size() < 2) throw std::invalid_argument("two-largest objective needs at least 2 points");
    double a1 = -1.0, a2 = -1.0;
    for (const auto& x : points.points()) {
        const double a = std::abs(x - z);
        if (a > a1) {
            a2 = a1;
            a1 = a;
        } else if (a > a2) {
            a2 = a;
        }
    }
    if (std::isinf(p)) return a1;
    if (a1 == 0.0) return 0.0;
    return a1 * std::pow(0.5 * (1.0 + std::pow(a2 / a1, p)), 1.0 / p);
}

TwoLargestRadius two_largest_radius(const PointSet& points, double p) {
    if (points.size() < 2) throw std::invalid_argument("two_largest_radius needs at least 2 points");
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("two_largest_radius needs finite p >= 1");
    const auto& x = points.points();

    auto sample = [&](cplx z) {
        std::size_t i1 = 0, i2 = 1;
        if (std::abs(x[1] - z) > std::abs(x[0] - z)) std::swap(i1, i2);
        for (std::size_t i = 2; i < x.size(); ++i) {
            const double a = std::abs(x[i] - z);
            if (a > std::abs(x[i1] - z)) {
                i2 = i1;
                i1 = i;
            } else if (a > std::abs(x[i2] - z)) {
                i2 = i;
            }
        }
        const double a1 = std::abs(x[i1] - z), a2 = std::abs(x[i2] - z);
        const double g = two_largest_objective(points, z, p);
        if (g == 0.0) return ConvexSample{0.0, 0.0};
        auto unit = [&](std::size_t i, double a) { return a > 0.0 ? (z - x[i]) / a : cplx(0.0); };
        const cplx grad = 0.5 * std::pow(g, 1.0 - p) *
                          (std::pow(a1, p - 1.0) * unit(i1, a1) + std::pow(a2, p - 1.0) * unit(i2, a2));
        return ConvexSample{g, grad};
    };

    cplx centroid = 0.0;
    for (const auto& z : x) centroid += z;
    centroid /= static_cast<double>(x.size());
    double spread = 0.0;
    for (const auto& z : x) spread = std::max(spread, std::abs(z - centroid));
    if (spread == 0.0) return {centroid, 0.0, 0.0};

    const auto found = minimize_convex_2d(sample, centroid, 1.01 * spread, {0.0, 1e-14, 4000});
    const Circle circle = enclosing_circle(points);
    const double at_center = two_largest_objective(points, circle.center, p);

    TwoLargestRadius out{found.point, found.value, 0.0};
    if (at_center <= found.value) out = {circle.center, at_center, 0.0};

    const double ring = 1e-3 * (1.0 + out.value);
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 16; ++k) {
        const cplx probe = out.z_star + std::polar(ring, 2.0 * M_PI * k / 16.0);
        margin = std::min(margin, two_largest_objective(points, probe, p) - out.value);
    }
    out.ring_margin = margin;
    return out;
}

}  // namespace varbound
