#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "varbound/norms.hpp"
#include "varbound/random.hpp"
#include "varbound/scalar_geometry.hpp"

#include <algorithm>
#include <cmath>

using namespace varbound;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("point sets and probability vectors") {
    CHECK_THROWS_AS(PointSet({}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector({0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector({1.1, -0.1}), std::invalid_argument);
    const ProbVector p({1.0 + 1e-13, -1e-13});
    CHECK(p[1] == 0.0);
    CHECK_THROWS_AS(variance(PointSet({0.0, 1.0}), ProbVector::uniform(3)), std::invalid_argument);
}

TEST_CASE("variance fixtures") {
    CHECK(variance(PointSet({0.0, 2.0}), ProbVector::uniform(2)) == doctest::Approx(1.0));
    CHECK(variance(PointSet({0.3, 7.0, I}), ProbVector::point_mass(3, 1)) == 0.0);
    CHECK(variance(PointSet({1.0, I, -1.0, -I}), ProbVector::uniform(4)) == doctest::Approx(1.0));
}

TEST_CASE("Murthy-Sethi bound") {
    CHECK(murthy_sethi_bound(0.0, 2.0) == 1.0);
    CHECK(murthy_sethi_bound(0.7, 0.7) == 0.0);
    CHECK(murthy_sethi_bound(-1.0, 1.0) == 1.0);
    CHECK_THROWS_AS(murthy_sethi_bound(1.0, 0.0), std::invalid_argument);
    for (int t = 0; t < 40; ++t) {
        Rng rng(derive_seed(31, t));
        const std::size_t d = 2 + rng.index(3);
        std::vector<cplx> x(d);
        for (auto& v : x) v = rng.normal();
        double lo = x[0].real(), hi = lo;
        for (auto v : x) {
            lo = std::min(lo, v.real());
            hi = std::max(hi, v.real());
        }
        CHECK(oracle::simplex_grid_max_variance(x, 0.02) <= murthy_sethi_bound(lo, hi) + 1e-6);
    }
}

TEST_CASE("enclosing circle fixtures") {
    const Circle a = enclosing_circle(PointSet({0.0, 1.0}));
    CHECK(std::abs(a.center - 0.5) <= 1e-15);
    CHECK(a.radius == doctest::Approx(0.5));
    const Circle b = enclosing_circle(PointSet({1.0, -1.0}));
    CHECK(std::abs(b.center) <= 1e-15);
    CHECK(b.radius == doctest::Approx(1.0));
    const std::vector<cplx> sq{1.0, I, -1.0, -I};
    const Circle c = enclosing_circle(PointSet(sq));
    const auto g = oracle::grid_minimize(
        [&](cplx z) {
            double r = 0.0;
            for (auto p : sq) r = std::max(r, std::abs(p - z));
            return r;
        },
        0.3, 2.0, 0.01);
    CHECK(std::abs(c.center) <= 1e-12);
    CHECK(std::abs(c.radius - g.value) <= 1e-9);
    CHECK(c.radius == doctest::Approx(1.0));
    const Circle s = enclosing_circle(PointSet({2.0 + I}));
    CHECK(s.radius == 0.0);
}

TEST_CASE("enclosing circle against brute force, with duplicates and collinear points") {
    for (int t = 0; t < 300; ++t) {
        Rng rng(derive_seed(32, t));
        const std::size_t n = 1 + rng.index(12);
        auto pts = random_points(rng, n);
        if (t % 5 == 0 && n > 2) pts[1] = pts[0];
        if (t % 7 == 0)
            for (auto& z : pts) z = cplx(z.real(), 2.0 * z.real() + 1.0);
        const Circle c = enclosing_circle(PointSet(pts));
        const auto ref = oracle::brute_enclosing_circle(pts);
        CHECK(std::abs(c.radius - ref.radius) <= 1e-9 * (1.0 + ref.radius));
        double scale = 0.0;
        int on = 0;
        for (auto z : pts) {
            scale = std::max(scale, std::abs(z));
            CHECK(std::abs(z - c.center) <= c.radius + 1e-12 * (1.0 + scale));
            if (std::abs(z - c.center) >= c.radius - 1e-9) ++on;
        }
        if (n >= 2 && c.radius > 0.0) CHECK(on >= 2);
    }
}

TEST_CASE("radius invariances") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(33, t));
        auto pts = random_points(rng, 2 + rng.index(9));
        const double r = enclosing_circle(PointSet(pts)).radius;
        const cplx w = 3.0 * rng.complex_normal();
        const cplx rot = std::polar(1.0, 6.0 * rng.uniform());
        const double s = 0.1 + 4.0 * rng.uniform();
        auto a = pts, b = pts, c = pts;
        for (auto& z : a) z += w;
        for (auto& z : b) z *= rot;
        for (auto& z : c) z *= s;
        CHECK(std::abs(enclosing_circle(PointSet(a)).radius - r) <= 1e-10 * (1.0 + std::abs(w)));
        CHECK(std::abs(enclosing_circle(PointSet(b)).radius - r) <= 1e-10);
        CHECK(std::abs(enclosing_circle(PointSet(c)).radius - s * r) <= 1e-10 * s);
    }
}

TEST_CASE("maximizing distribution fixtures") {
    const auto two = max_variance_distribution(PointSet({0.0, 2.0}));
    CHECK(two.value == doctest::Approx(1.0));
    CHECK(two.probs[0] == doctest::Approx(0.5));
    const auto one = max_variance_distribution(PointSet({3.0 + I}));
    CHECK(one.value == 0.0);
    CHECK(one.probs[0] == 1.0);

    const std::vector<cplx> tri{0.0, 1.0, I};
    const auto m = max_variance_distribution(PointSet(tri));
    const double r = enclosing_circle(PointSet(tri)).radius;
    CHECK(std::abs(m.value - r * r) <= 1e-12);
    CHECK(std::abs(m.value - oracle::simplex_grid_max_variance(tri, 0.01)) <= 1e-3);
}

TEST_CASE("maximizing distribution on random sets") {
    for (int t = 0; t < 300; ++t) {
        Rng rng(derive_seed(34, t));
        const std::size_t n = 1 + rng.index(10);
        const auto pts = random_points(rng, n);
        const PointSet ps(pts);
        const Circle c = enclosing_circle(ps);
        const auto m = max_variance_distribution(ps);
        CHECK(std::abs(m.value - c.radius * c.radius) <= 1e-9);
        CHECK(std::abs(variance(ps, m.probs) - m.value) <= 1e-9);
        CHECK(std::abs(mean(ps, m.probs) - c.center) <= 1e-9);
        for (std::size_t i = 0; i < n; ++i)
            if (m.probs[i] > 0.0) CHECK(std::abs(pts[i] - c.center) >= c.radius - 1e-7);
        if (n <= 4) CHECK(m.value >= oracle::simplex_grid_max_variance(pts, 0.05) - 1e-9);
    }
}

TEST_CASE("cocircular points keep a valid witness") {
    std::vector<cplx> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(std::polar(2.0, k * M_PI / 3.0));
    const auto m = max_variance_distribution(PointSet(pts));
    CHECK(m.value == doctest::Approx(4.0));
    CHECK(std::abs(mean(PointSet(pts), m.probs)) <= 1e-12);
}

TEST_CASE("two-largest radius") {
    const auto a = two_largest_radius(PointSet({0.0, 1.0}), 2.0);
    CHECK(std::abs(a.z_star - 0.5) <= 1e-7);
    CHECK(std::abs(a.value - 0.5) <= 1e-12);
    const std::vector<cplx> tri{0.0, 1.0, I};
    CHECK(std::abs(two_largest_radius(PointSet(tri), 1.0).value - enclosing_circle(PointSet(tri)).radius) <= 1e-9);
    CHECK_THROWS_AS(two_largest_radius(PointSet({1.0}), 2.0), std::invalid_argument);
    CHECK_THROWS_AS(two_largest_radius(PointSet({1.0, 2.0}), 0.5), std::invalid_argument);

    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(35, t));
        const auto pts = random_points(rng, 2 + rng.index(11));
        const PointSet ps(pts);
        const Circle c = enclosing_circle(ps);
        for (double p : {1.0, 2.0, 4.0}) {
            const auto tl = two_largest_radius(ps, p);
            CHECK(std::abs(tl.value - c.radius) <= 1e-7);
            CHECK(tl.ring_margin >= -1e-9);
            const auto g = oracle::grid_minimize([&](cplx z) { return two_largest_objective(ps, z, p); }, c.center + 0.3,
                                                 1.5 * c.radius, 0.02 * c.radius);
            CHECK(tl.value <= g.value + 1e-9);
        }
        double a1 = 0.0, a2 = 0.0;
        for (auto z : pts) {
            const double m = std::abs(z);
            if (m > a1) {
                a2 = a1;
                a1 = m;
            } else if (m > a2) {
                a2 = m;
            }
        }
        CHECK(std::abs(two_largest_objective(ps, 0.0, 1.0) - 0.5 * (a1 + a2)) <= 1e-14 * (1.0 + a1));
        CHECK(0.5 * (a1 + a2) >= c.radius - 1e-12);
    }
}

TEST_CASE("variance chain for point sets") {
    for (int t = 0; t < 200; ++t) {
        Rng rng(derive_seed(36, t));
        const std::size_t n = 2 + rng.index(9);
        const auto pts = random_points(rng, n);
        const PointSet ps(pts);
        const double r = enclosing_circle(ps).radius;
        const double kf2 = vector_norm(pts, NormSpec::kyfan(2)) / 2.0;
        CHECK(r <= kf2 + 1e-9);
        std::vector<cplx> f(n, 0.0);
        f[0] = f[1] = 1.0;
        for (const auto& s : {NormSpec::schatten(1), NormSpec::schatten(2), NormSpec::schatten(kInf),
                              NormSpec::kyfan(n), NormSpec::weighted_gauge(std::vector<double>(n, 0.3))})
            CHECK(kf2 <= vector_norm(pts, s) / vector_norm(f, s) + 1e-9);
        for (int k = 0; k < 20; ++k) {
            const ProbVector p(random_probabilities(rng, n));
            CHECK(std::sqrt(variance(ps, p)) <= r + 1e-9);
            const ProbVector q(random_probabilities(rng, n));
            const cplx mq = mean(ps, q);
            double around = 0.0;
            for (std::size_t i = 0; i < n; ++i) around += p[i] * std::norm(pts[i] - mq);
            CHECK(around >= variance(ps, p) - 1e-12);
        }
    }
}

TEST_CASE("smallest-circle center lies in the midpoint polygon") {
    for (int t = 0; t < 200; ++t) {
        Rng rng(derive_seed(37, t));
        // convex polygon from sorted random angles on a perturbed ellipse
        const std::size_t n = 3 + rng.index(8);
        std::vector<double> ang(n);
        for (auto& a : ang) a = 2.0 * M_PI * rng.uniform();
        std::sort(ang.begin(), ang.end());
        const double ax = 0.5 + rng.uniform(), by = 0.5 + rng.uniform();
        std::vector<cplx> poly;
        for (double a : ang) poly.emplace_back(ax * std::cos(a), by * std::sin(a));
        const cplx center = enclosing_circle(PointSet(poly)).center;
        double margin = 1e300;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx m0 = 0.5 * (poly[i] + poly[(i + 1) % n]);
            const cplx m1 = 0.5 * (poly[(i + 1) % n] + poly[(i + 2) % n]);
            const cplx e = m1 - m0;
            if (std::abs(e) == 0.0) continue;
            margin = std::min(margin, (e.real() * (center - m0).imag() - e.imag() * (center - m0).real()) / std::abs(e));
        }
        CHECK(margin >= -1e-9);
    }
}
