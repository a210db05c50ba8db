#ifndef VARBOUND_RANDOM_HPP
#define VARBOUND_RANDOM_HPP

#include "varbound/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace varbound {

/// Seeded generator passed explicitly to every sampler. Two generators built
/// from the same seed produce identical streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    /// Standard complex Gaussian, E|z|^2 = 1.
    cplx complex_normal();
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Independent stream seed for (master, index); splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

ComplexMatrix random_ginibre(Rng& rng, std::size_t rows, std::size_t cols);
inline ComplexMatrix random_ginibre(Rng& rng, std::size_t d) { return random_ginibre(rng, d, d); }

HermitianMatrix random_hermitian(Rng& rng, std::size_t d);

/// Haar unitary: Gram-Schmidt of a Ginibre sample with the diagonal phases of R fixed.
ComplexMatrix random_unitary(Rng& rng, std::size_t d);

struct NormalSample {
    ComplexMatrix matrix;
    std::vector<cplx> eigenvalues;
};

/// U Diag(lambda) U* with complex Gaussian lambda.
NormalSample random_normal(Rng& rng, std::size_t d);

/// G G* / Tr(G G*) for a d x rank Ginibre G.
DensityMatrix random_density(Rng& rng, std::size_t d, std::size_t rank);
DensityMatrix random_density(Rng& rng, std::size_t d);  // full rank

UnitVector random_unit_vector(Rng& rng, std::size_t d);

std::vector<cplx> random_points(Rng& rng, std::size_t n);

/// Dirichlet(1,...,1) sample.
std::vector<double> random_probabilities(Rng& rng, std::size_t n);

}  // namespace varbound

#endif
