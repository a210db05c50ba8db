#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "varbound/commutator.hpp"
#include "varbound/linalg.hpp"
#include "varbound/norms.hpp"
#include "varbound/random.hpp"

#include <cmath>

using namespace varbound;

TEST_CASE("spec parsing") {
    CHECK(NormSpec::parse("schatten:2").to_string() == "schatten:2");
    CHECK(NormSpec::parse("schatten:inf").to_string() == "schatten:inf");
    CHECK(NormSpec::parse("kyfan:2").to_string() == "kyfan:2");
    CHECK(NormSpec::parse("kyfanpk:2:3").to_string() == "kyfanpk:2:3");
    CHECK(std::holds_alternative<WeightedGauge>(NormSpec::parse("gauge:1,0.5").variant()));
    CHECK_THROWS_AS(NormSpec::parse("schatten:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("kyfan:0"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("frobenius"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("gauge:0,0"), std::invalid_argument);
    CHECK(std::isinf(parse_exponent("inf")));
    CHECK(parse_exponent("1.5") == 1.5);
    CHECK_THROWS_AS(parse_exponent("abc"), std::invalid_argument);
}

TEST_CASE("norms of F and Pauli matrices") {
    const ComplexMatrix f = f_matrix(4);
    for (double p : {1.0, 2.0, 3.0}) CHECK(std::abs(schatten_norm(f, p) - std::pow(2.0, 1.0 / p)) <= 1e-15);
    CHECK(kyfan_norm(pauli_x(), 2) == doctest::Approx(2.0));
    CHECK(std::abs(schatten_norm(commutator(pauli_x(), pauli_z()), 2.0) - 2.0 * std::sqrt(2.0)) <= 1e-15);
    const ComplexMatrix c = commutator(rank1_x(), unitary_y());
    for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) CHECK(std::abs(schatten_norm(c, p) - 2.0) <= 1e-14);
    CHECK(operator_norm(f) == 1.0);
    CHECK(norm(f, NormSpec::kyfan(1)) == norm(f, NormSpec::schatten(kInf)));
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(norm(pauli_x(), NormSpec::kyfan(3)), std::invalid_argument);
    CHECK_THROWS_AS(norm(pauli_x(), NormSpec::kyfan_pk(2.0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(norm(f_matrix(3), NormSpec::weighted_gauge({1.0, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS(f_ratio_bounds(ComplexMatrix(1, 1), NormSpec::schatten(2)), std::invalid_argument);
}

TEST_CASE("vector norms are norms of the diagonal embedding") {
    CHECK(vector_norm(std::vector<cplx>{1.0, 1.0, 0.0}, NormSpec::kyfan(2)) == doctest::Approx(2.0));
    CHECK(vector_norm(std::vector<cplx>{3.0, -4.0}, NormSpec::schatten(2)) == doctest::Approx(5.0));
    const std::vector<cplx> fv{1.0, 1.0, 0.0, 0.0};
    for (const auto& s : {NormSpec::schatten(1.5), NormSpec::kyfan(3), NormSpec::kyfan_pk(3, 2),
                          NormSpec::weighted_gauge({0.2, 1.0, 0.5, 0.0})})
        CHECK(std::abs(vector_norm(fv, s) - norm(f_matrix(4), s)) <= 1e-15);
}

TEST_CASE("weighted gauge sorts its weights") {
    const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<double>{3.0, 1.0});
    CHECK(norm(d, NormSpec::weighted_gauge({0.5, 2.0})) == doctest::Approx(2.0 * 3.0 + 0.5 * 1.0));
}

TEST_CASE("F-ratio bounds on fixtures") {
    const auto self = f_ratio_bounds(f_matrix(3), NormSpec::schatten(3));
    CHECK(self.ratio == doctest::Approx(1.0));
    CHECK(self.lower == doctest::Approx(1.0));
    CHECK(self.upper >= 1.0);
    const auto e = f_ratio_bounds(basis_matrix(1, 2, 2), NormSpec::schatten(1));
    CHECK(e.ratio == doctest::Approx(0.5));
    CHECK(e.lower == doctest::Approx(0.5));
    Rng rng(11);
    const ComplexMatrix x = random_ginibre(rng, 6);
    const auto b = f_ratio_bounds(x, NormSpec::schatten(3));
    CHECK(b.lower - 1e-10 <= b.ratio);
    CHECK(b.ratio <= b.upper + 1e-10);
}

TEST_CASE("norms agree with oracle singular values") {
    for (int t = 0; t < 40; ++t) {
        Rng rng(derive_seed(21, t));
        const std::size_t d = 2 + rng.index(6);
        const ComplexMatrix x = random_ginibre(rng, d);
        const auto sv = oracle::bisection_singular_values(x);
        double s1 = 0.0, s2 = 0.0;
        for (double v : sv) {
            s1 += v;
            s2 += v * v;
        }
        CHECK(std::abs(schatten_norm(x, 1.0) - s1) <= 1e-7 * s1);
        CHECK(std::abs(schatten_norm(x, 2.0) - std::sqrt(s2)) <= 1e-9 * s1);
        CHECK(std::abs(schatten_norm(x, 2.0) - x.frobenius_norm()) <= 1e-12 * s1);
        CHECK(std::abs(kyfan_norm(x, 2) - sv[0] - sv[1]) <= 1e-7 * s1);
        CHECK(std::abs(operator_norm(x) - sv[0]) <= 1e-7 * s1);
    }
}

TEST_CASE("unitary invariance, triangle inequality and homogeneity") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(22, t));
        const std::size_t d = 2 + rng.index(6);
        const ComplexMatrix x = random_ginibre(rng, d), y = random_ginibre(rng, d);
        const ComplexMatrix u = random_unitary(rng, d), v = random_unitary(rng, d);
        std::vector<double> alpha(d);
        for (auto& a : alpha) a = rng.uniform();
        const cplx c = rng.complex_normal();
        for (const auto& s : {NormSpec::schatten(1), NormSpec::schatten(2.5), NormSpec::schatten(kInf),
                              NormSpec::kyfan(2), NormSpec::kyfan_pk(3, d), NormSpec::weighted_gauge(alpha)}) {
            const double nx = norm(x, s);
            CHECK(std::abs(norm(u * x * v, s) - nx) <= 1e-9 * (1.0 + nx));
            CHECK(norm(x + y, s) <= nx + norm(y, s) + 1e-9);
            CHECK(std::abs(norm(c * x, s) - std::abs(c) * nx) <= 1e-9 * (1.0 + nx));
        }
    }
}

TEST_CASE("Ky Fan monotonicity and (p,k) definition") {
    Rng rng(23);
    const ComplexMatrix x = random_ginibre(rng, 7);
    const auto sv = singular_values(x).values();
    double prev = 0.0;
    for (std::size_t k = 1; k <= 7; ++k) {
        CHECK(kyfan_norm(x, k) >= prev);
        prev = kyfan_norm(x, k);
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i) acc += std::pow(sv[i], 2.5);
        CHECK(std::abs(kyfan_pk_norm(x, 2.5, k) - std::pow(acc, 1.0 / 2.5)) <= 1e-12 * prev);
    }
}

TEST_CASE("Ky Fan sandwich, corollary and Cartesian comparisons") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(24, t));
        const std::size_t d = 2 + rng.index(9);
        const ComplexMatrix x = random_ginibre(rng, d);
        std::vector<NormSpec> grid;
        for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) grid.push_back(NormSpec::schatten(p));
        for (std::size_t k = 1; k <= d; ++k) grid.push_back(NormSpec::kyfan(k));
        for (int g = 0; g < 50; ++g) {
            std::vector<double> alpha(d);
            for (auto& a : alpha) a = rng.uniform();
            grid.push_back(NormSpec::weighted_gauge(alpha));
        }
        for (const auto& s : grid) {
            const auto b = f_ratio_bounds(x, s);
            CHECK(b.lower - 1e-9 <= b.ratio);
            CHECK(b.ratio <= b.upper + 1e-9);
        }
        const auto kf2 = f_ratio_bounds(x, NormSpec::kyfan(2));
        CHECK(std::abs(kf2.ratio - kf2.lower) <= 1e-13 * kf2.lower);

        const double x22 = kyfan_pk_norm(x, 2, 2), x2 = schatten_norm(x, 2), xi = operator_norm(x);
        for (double p : {2.0, 3.0, 5.0, kInf}) {
            const double mid = schatten_norm(x, p) / schatten_norm(f_matrix(d), p);
            CHECK(x22 / std::sqrt(2.0) <= mid + 1e-9);
            CHECK(mid <= std::max(x2 / std::sqrt(2.0), xi) + 1e-9);
        }

        const ComplexMatrix xc = modulus(x, ModulusKind::C).matrix();
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
            const double a = schatten_norm(xc, p), b = schatten_norm(x, p);
            const double f = std::pow(2.0, std::abs(0.5 - 1.0 / p));
            if (p >= 2.0) {
                CHECK(a <= b + 1e-9);
                CHECK(b <= f * a + 1e-9);
            } else {
                CHECK(b <= a + 1e-9);
                CHECK(a <= f * b + 1e-9);
            }
        }
        for (std::size_t k = 1; k <= d; ++k) CHECK(kyfan_pk_norm(xc, 2, k) <= kyfan_pk_norm(x, 2, k) + 1e-9);
    }
}
