#include "varbound/random.hpp"

#include <cmath>
#include <stdexcept>

namespace varbound {

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) * M_SQRT1_2;
}

std::size_t Rng::index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
    std::vector<cplx> entries(rows * cols);
    for (auto& z : entries) z = rng.complex_normal();
    return ComplexMatrix(rows, cols, std::move(entries));
}

HermitianMatrix random_hermitian(Rng& rng, std::size_t d) {
    return HermitianMatrix(random_ginibre(rng, d));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t d) {
    ComplexMatrix q = random_ginibre(rng, d);
    // modified Gram-Schmidt on columns; r_jj = column norm is real positive, which
    // is the phase fixing that makes the result Haar distributed
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * q(i, j);
            for (std::size_t i = 0; i < d; ++i) q(i, j) -= proj * q(i, k);
        }
        double n = 0.0;
        for (std::size_t i = 0; i < d; ++i) n += std::norm(q(i, j));
        n = std::sqrt(n);
        for (std::size_t i = 0; i < d; ++i) q(i, j) /= n;
    }
    return q;
}

NormalSample random_normal(Rng& rng, std::size_t d) {
    const ComplexMatrix u = random_unitary(rng, d);
    std::vector<cplx> lambdas(d);
    for (auto& z : lambdas) z = rng.complex_normal();
    ComplexMatrix x = u * ComplexMatrix::diagonal(std::span<const cplx>(lambdas)) * u.adjoint();
    return {std::move(x), std::move(lambdas)};
}

DensityMatrix random_density(Rng& rng, std::size_t d, std::size_t rank) {
    if (rank < 1 || rank > d) throw std::invalid_argument("density rank must lie in [1, d]");
    const ComplexMatrix g = random_ginibre(rng, d, rank);
    ComplexMatrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityMatrix(m);
}

DensityMatrix random_density(Rng& rng, std::size_t d) { return random_density(rng, d, d); }

UnitVector random_unit_vector(Rng& rng, std::size_t d) {
    std::vector<cplx> v(d);
    for (auto& z : v) z = rng.complex_normal();
    return UnitVector(std::move(v));
}

std::vector<cplx> random_points(Rng& rng, std::size_t n) {
    std::vector<cplx> pts(n);
    for (auto& z : pts) z = rng.complex_normal();
    return pts;
}

std::vector<double> random_probabilities(Rng& rng, std::size_t n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
        x = -std::log(1.0 - rng.uniform());
        s += x;
    }
    for (auto& x : p) x /= s;
    return p;
}

}  // namespace varbound
