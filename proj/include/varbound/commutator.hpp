#ifndef VARBOUND_COMMUTATOR_HPP
#define VARBOUND_COMMUTATOR_HPP

#include "varbound/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace varbound {

/// XY - YX
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// | ||XY-YX||_2^2 + ||X*Y+YX*||_2^2 - Tr[(X*X+XX*)(Y*Y+YY*)] |
double proof_identity_residual(const ComplexMatrix& x, const ComplexMatrix& y);

/// (X*X + XX*) / (2 ||X||_2^2); rejects ||X||_2 <= 1e-14.
DensityMatrix rho_from_x(const ComplexMatrix& x);

/// Commutator exponents (p, q, r) for ||[X,Y]||_p <= c ||X||_q ||Y||_r.
struct Exponents {
    double p;
    double q;
    double r;
};

/// Throws std::invalid_argument unless p, q, r >= 1 and 1/p <= 1/q + 1/r.
void check_exponents(const Exponents& e);

/// 2^{max(1/p, 1-1/p, 1-1/r)} when p == q.
std::optional<double> conjectured_constant(const Exponents& e);

/// ||[X,Y]||_p / (||X||_q ||Y||_r); nullopt when the denominator is below 1e-14.
std::optional<double> commutator_ratio(const ComplexMatrix& x, const ComplexMatrix& y, const Exponents& e);

struct BoundEntry {
    std::string name;
    double value;
    bool holds;
    double slack;  // value - lhs
};

struct BoundReport {
    double lhs;  // ||[X,Y]||_p
    std::vector<BoundEntry> bounds;
    double ratio;
};

//
// Evaluates every applicable upper bound on ||[X,Y]||_p:
//   bw            sqrt(2) ||X||_2 ||Y||_2                       (p = q = r = 2)
//   holder        2 ||X||_q ||Y||_r                              (1/p = 1/q + 1/r)
//   chain.*       2||X||_2 sqrt(Var_C(Y; rho_X)) <= 2||X||_2 r_C(Y)
//                 <= sqrt(2)||X||_2 ||Y||_(2),2 <= 2^{max(1/2,1-1/r)} ||X||_2 ||Y||_r   (p = 2)
//   normal.*      2||X||_2 r(Y) <= ||X||_2 ||Y||_(2) <= 2^{1-1/r} ||X||_2 ||Y||_r      (p = 2, Y normal)
//
BoundReport evaluate_bounds(const ComplexMatrix& x, const ComplexMatrix& y, const Exponents& e);

struct WitnessFamily {
    std::string name;
    ComplexMatrix x;
    ComplexMatrix y;
    double ratio;        // computed
    double exact_ratio;  // closed form
};

/// The explicit extremal pairs (the rank-one/unitary pair in both orders).
std::vector<WitnessFamily> witness_families(const Exponents& e);

/// The rank-one / unitary anti-commuting pair with singular values (1,0) and (1,1).
ComplexMatrix rank1_x();
ComplexMatrix unitary_y();

struct SearchResult {
    double best_ratio = 0.0;
    ComplexMatrix witness_x;
    ComplexMatrix witness_y;
    std::string witness_source;
    int trials = 0;
    int skipped = 0;
    std::optional<double> conjectured;
    /// best_ratio exceeds the conjectured constant by more than 1e-6
    bool exceeds_conjecture = false;
    std::vector<int> dims_tried;
    std::uint64_t seed = 0;
};

/// Randomized lower bound on c_{p,q,r}: witness families first, then Ginibre
/// pairs, normal pairs and perturbations of the running best.
SearchResult search_constant(const Exponents& e, const std::vector<int>& dims, int trials, std::uint64_t seed);

}  // namespace varbound

#endif
