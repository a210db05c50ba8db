#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "varbound/commutator.hpp"
#include "varbound/linalg.hpp"
#include "varbound/random.hpp"

#include <algorithm>
#include <cmath>

using namespace varbound;

namespace {
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }
}  // namespace

TEST_CASE("eigen: diagonal and Pauli") {
    const auto e = hermitian_eig(HermitianMatrix(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0})));
    CHECK(e.values == std::vector<double>{1.0, 0.0});
    CHECK(std::abs(std::abs(e.vectors(0, 0)) - 1.0) < 1e-15);
    const auto p = hermitian_eig(HermitianMatrix(pauli_x()));
    CHECK(p.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.values[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("eigen: seeded 8x8 against the bisection oracle") {
    Rng rng(7);
    const HermitianMatrix h = random_hermitian(rng, 8);
    const auto e = hermitian_eig(h);
    const auto ref = oracle::bisection_eigenvalues(h.matrix());
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(e.values[i] - ref[i]) <= 1e-8);
}

TEST_CASE("eigen: residual, orthonormality and reconstruction on random samples") {
    for (int t = 0; t < 1000; ++t) {
        Rng rng(derive_seed(99, t));
        const std::size_t d = 1 + rng.index(16);
        const HermitianMatrix h = random_hermitian(rng, d);
        const auto e = hermitian_eig(h);
        const double scale = 1.0 + h.matrix().max_abs();
        const ComplexMatrix& v = e.vectors;
        CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
        CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)) <= 1e-10);
        const ComplexMatrix rec = v * ComplexMatrix::diagonal(std::span<const double>(e.values)) * v.adjoint();
        CHECK(max_abs_diff(rec, h.matrix()) <= 1e-9 * scale);
        for (std::size_t i = 0; i < d; ++i) {
            const auto col = v.column(i);
            const auto hv = h.matrix() * std::span<const cplx>(col);
            double r = 0.0;
            for (std::size_t k = 0; k < d; ++k) r = std::max(r, std::abs(hv[k] - e.values[i] * col[k]));
            CHECK(r <= 1e-10 * scale);
        }
    }
}

TEST_CASE("singular values") {
    CHECK(singular_values(basis_matrix(1, 2, 2)).values() == std::vector<double>{1.0, 0.0});
    const auto z = singular_values(pauli_z()).values();
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 1.0);
    const auto sx = singular_values(rank1_x()).values();
    CHECK(std::abs(sx[0] - 1.0) <= 1e-14);
    CHECK(std::abs(sx[1]) <= 1e-14);
    const auto sy = singular_values(unitary_y()).values();
    CHECK(std::abs(sy[0] - 1.0) <= 1e-14);
    CHECK(std::abs(sy[1] - 1.0) <= 1e-14);
    const auto sc = singular_values(commutator(rank1_x(), unitary_y())).values();
    CHECK(std::abs(sc[0] - 2.0) <= 1e-14);
    CHECK(std::abs(sc[1]) <= 1e-14);

    CHECK_THROWS_AS(SingularSpectrum({0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SingularSpectrum({1.0, -0.1}), std::invalid_argument);

    for (int t = 0; t < 50; ++t) {
        Rng rng(derive_seed(11, t));
        const std::size_t r = 1 + rng.index(7), c = 1 + rng.index(7);
        const ComplexMatrix x = random_ginibre(rng, r, c);
        const auto sv = singular_values(x).values();
        const auto ref = oracle::bisection_singular_values(x);
        REQUIRE(sv.size() == std::min(r, c));
        for (std::size_t i = 0; i < sv.size(); ++i) CHECK(std::abs(sv[i] - ref[i]) <= 1e-7 * (1.0 + ref[0]));
    }
}

TEST_CASE("singular values are unitarily invariant") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(12, t));
        const std::size_t d = 1 + rng.index(8);
        const ComplexMatrix x = random_ginibre(rng, d);
        const ComplexMatrix y = random_unitary(rng, d) * x * random_unitary(rng, d);
        const auto a = singular_values(x).values(), b = singular_values(y).values();
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
    }
}

TEST_CASE("moduli of e12") {
    const ComplexMatrix e = basis_matrix(1, 2, 2);
    CHECK(max_abs_diff(modulus(e, ModulusKind::L).matrix(), ComplexMatrix::diagonal(std::vector<double>{0, 1})) <= 1e-15);
    CHECK(max_abs_diff(modulus(e, ModulusKind::R).matrix(), ComplexMatrix::diagonal(std::vector<double>{1, 0})) <= 1e-15);
    const double h = std::sqrt(0.5);
    CHECK(max_abs_diff(modulus(e, ModulusKind::C).matrix(), ComplexMatrix::diagonal(std::vector<double>{h, h})) <= 1e-15);
    CHECK_THROWS_AS(modulus(ComplexMatrix(2, 3), ModulusKind::L), std::invalid_argument);
    CHECK(parse_modulus_kind("C") == ModulusKind::C);
    CHECK_THROWS_AS(parse_modulus_kind("X"), std::invalid_argument);
}

TEST_CASE("modulus properties on random matrices") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(derive_seed(13, t));
        const std::size_t d = 1 + rng.index(8);
        const ComplexMatrix x = random_ginibre(rng, d);
        const double scale = 1.0 + x.max_abs() * x.max_abs();
        for (auto kind : {ModulusKind::L, ModulusKind::R, ModulusKind::C}) {
            const ComplexMatrix m = modulus(x, kind).matrix();
            CHECK(hermitian_eig(HermitianMatrix(m)).values.back() >= -1e-12);
            CHECK(max_abs_diff(m * m, modulus_squared(x, kind).matrix()) <= 1e-10 * scale);
        }
        const auto el = hermitian_eig(modulus(x, ModulusKind::L)).values;
        const auto er = hermitian_eig(modulus(x, ModulusKind::R)).values;
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(el[i] - er[i]) <= 1e-9);
        const ComplexMatrix l2 = modulus_squared(x, ModulusKind::L).matrix();
        const ComplexMatrix r2 = modulus_squared(x, ModulusKind::R).matrix();
        ComplexMatrix avg = l2 + r2;
        avg *= 0.5;
        CHECK(max_abs_diff(modulus_squared(x, ModulusKind::C).matrix(), avg) <= 1e-12 * scale);

        const auto parts = cartesian_parts(x);
        const ComplexMatrix a = parts.real.matrix(), b = parts.imag.matrix();
        CHECK(max_abs_diff(a + cplx(0, 1) * b, x) <= 1e-12 * (1.0 + x.max_abs()));
        CHECK(max_abs_diff(a * a + b * b, modulus_squared(x, ModulusKind::C).matrix()) <= 1e-10 * scale);
    }
}

TEST_CASE("normal matrices have one modulus") {
    for (int t = 0; t < 50; ++t) {
        Rng rng(derive_seed(14, t));
        const auto n = random_normal(rng, 1 + rng.index(6));
        CHECK(is_normal(n.matrix));
        const ComplexMatrix l = modulus(n.matrix, ModulusKind::L).matrix();
        CHECK(max_abs_diff(l, modulus(n.matrix, ModulusKind::R).matrix()) <= 1e-10);
        CHECK(max_abs_diff(l, modulus(n.matrix, ModulusKind::C).matrix()) <= 1e-10);
        auto ev = normal_eigenvalues(n.matrix);
        auto ref = n.eigenvalues;
        auto key = [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); };
        std::sort(ev.begin(), ev.end(), key);
        std::sort(ref.begin(), ref.end(), key);
        for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - ref[i]) <= 1e-9);
    }
    CHECK_FALSE(is_normal(basis_matrix(1, 2, 2)));
}

TEST_CASE("Cartesian parts of Pauli y and Hermitian inputs") {
    const auto y = cartesian_parts(pauli_y());
    CHECK(y.real.matrix() == pauli_y());
    CHECK(y.imag.matrix().max_abs() == 0.0);
    const auto e = cartesian_parts(basis_matrix(1, 2, 2));
    CHECK(e.real.matrix()(0, 1) == cplx(0.5, 0.0));
    CHECK(e.imag.matrix()(1, 0) == cplx(0.0, 0.5));
    const auto h = cartesian_parts(pauli_x());
    CHECK(h.real.matrix() == pauli_x());
    CHECK(h.imag.matrix().max_abs() == 0.0);
    Rng rng(3);
    const ComplexMatrix x = random_ginibre(rng, 5);
    const auto p = cartesian_parts(x);
    CHECK(max_abs_diff(p.real.matrix() + cplx(0, 1) * p.imag.matrix(), x) < 1e-12);
}

TEST_CASE("constants") {
    CHECK(f_matrix(3) == ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 0.0}));
    CHECK_THROWS_AS(f_matrix(1), std::invalid_argument);
    CHECK(pauli_y() == ComplexMatrix(2, 2, {0.0, cplx(0, 1), cplx(0, -1), 0.0}));
    CHECK(pauli_x() == ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
    CHECK(pauli_z() == ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}));
    CHECK(basis_matrix(1, 2, 2) == ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}));
    CHECK_THROWS_AS(basis_matrix(3, 1, 2), std::invalid_argument);
    CHECK(identity(3) == ComplexMatrix::identity(3));
}

TEST_CASE("psd square root rejects clearly negative input") {
    CHECK_THROWS_AS(psd_sqrt(HermitianMatrix(ComplexMatrix::diagonal(std::vector<double>{1.0, -0.5}))),
                    std::invalid_argument);
    const auto r = psd_sqrt(HermitianMatrix(ComplexMatrix::diagonal(std::vector<double>{4.0, -1e-14})));
    CHECK(r.matrix()(0, 0).real() == doctest::Approx(2.0));
    CHECK(r.matrix()(1, 1).real() == 0.0);
}
