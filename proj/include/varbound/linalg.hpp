#ifndef VARBOUND_LINALG_HPP
#define VARBOUND_LINALG_HPP

#include "varbound/matrix.hpp"

#include <string_view>
#include <vector>

namespace varbound {

/// Eigenpairs of a Hermitian matrix. `values` are sorted non-increasing and
/// column i of `vectors` belongs to values[i].
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi rotations. Throws ConvergenceError when the sweep
/// budget runs out before the off-diagonal mass is negligible.
EigenDecomposition hermitian_eig(const HermitianMatrix& h);

struct TopEigenpair {
    double value;
    std::vector<cplx> vector;
};

TopEigenpair top_eigenpair(const HermitianMatrix& h);
double lambda_max(const HermitianMatrix& h);

/// Singular values sorted non-increasing; always min(rows, cols) of them.
class SingularSpectrum {
public:
    explicit SingularSpectrum(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

/// Square roots of the eigenvalues of X*X (or XX* when that is smaller).
SingularSpectrum singular_values(const ComplexMatrix& x);

enum class ModulusKind { L, R, C };

std::string_view to_string(ModulusKind kind);
ModulusKind parse_modulus_kind(std::string_view s);

/// X*X (L), XX* (R), or (X*X + XX*)/2 (C).
HermitianMatrix modulus_squared(const ComplexMatrix& x, ModulusKind kind);
/// Principal square root of modulus_squared.
HermitianMatrix modulus(const ComplexMatrix& x, ModulusKind kind);

/// Square root of a PSD matrix. Eigenvalues in [-1e-10 * (1 + |H|), 0) are
/// clamped to zero; anything more negative is rejected.
HermitianMatrix psd_sqrt(const HermitianMatrix& h);

struct CartesianParts {
    HermitianMatrix real;
    HermitianMatrix imag;
};

/// X = A + iB with A = (X + X*)/2, B = (X - X*)/(2i).
CartesianParts cartesian_parts(const ComplexMatrix& x);

/// |XX* - X*X| entrywise maximum.
double normality_defect(const ComplexMatrix& x);
bool is_normal(const ComplexMatrix& x, double tol = 1e-10);

/// Eigenvalues of a normal matrix, obtained from the eigenbasis of a generic
/// Hermitian combination of its Cartesian parts. Throws if X is not normal.
std::vector<cplx> normal_eigenvalues(const ComplexMatrix& x);

// Constants. Basis indices are 1-based, matching e^{ij} notation.
ComplexMatrix identity(std::size_t d);
ComplexMatrix basis_matrix(std::size_t i, std::size_t j, std::size_t d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// Diag(1, 1, 0, ..., 0); requires d >= 2.
ComplexMatrix f_matrix(std::size_t d);

}  // namespace varbound

#endif
