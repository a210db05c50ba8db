#ifndef VARBOUND_MATRIX_RADII_HPP
#define VARBOUND_MATRIX_RADII_HPP

#include "varbound/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace varbound {

/// Var_*(X) = Tr[rho |X - Tr[rho X] 1|_*^2], clamped at zero.
double quantum_variance(const ComplexMatrix& x, const DensityMatrix& rho, ModulusKind kind);
/// Tr[rho |X|_*^2] - |Tr[rho X]|^2; equal to quantum_variance up to rounding.
double quantum_variance_expanded(const ComplexMatrix& x, const DensityMatrix& rho, ModulusKind kind);

/// <psi, |X|_*^2 psi> - |<psi, X psi>|^2
double pure_state_variance(const ComplexMatrix& x, std::span<const cplx> psi, ModulusKind kind);

/// lambda_max(|X - y 1|_*^2), the dual objective whose minimum over y is r_*(X)^2.
double dual_objective(const ComplexMatrix& x, cplx y, ModulusKind kind);

struct MaxVarianceResult {
    double value;
    UnitVector witness;
};

struct MaxVarianceOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
    /// Optimal shift from the dual problem; its top eigenspace seeds extra starts.
    std::optional<cplx> dual_shift;
};

/// Maximum of the pure-state variance over unit vectors, by Riemannian
/// gradient ascent from several starts. Always a lower bound on r_*(X)^2.
MaxVarianceResult max_variance(const ComplexMatrix& x, ModulusKind kind, const MaxVarianceOptions& options = {});

struct RadiusResult {
    ModulusKind kind;
    cplx y_star;
    double value;
    double primal_value;
    UnitVector witness;
    /// Certified lower bound on value^2 from the dual minimizer.
    double dual_lower_bound;
    int iterations;

    /// value^2 - primal_value; zero at exact duality.
    double gap() const { return value * value - primal_value; }
};

//
// r_*(X) = min_y || |X - y 1|_* ||_inf, computed on the dual side by an
// ellipsoid method over y, with the primal maximum variance reported next to
// it. A scalar multiple of the identity short-circuits to zero.
//
RadiusResult radius(const ComplexMatrix& x, ModulusKind kind, const MaxVarianceOptions& options = {});

struct NumericalRangeSample {
    std::vector<double> angles;
    std::vector<double> support_values;
    std::vector<cplx> boundary_points;
};

/// Support function lambda_max(Re(e^{i theta} X)) and the matching boundary
/// points at theta_k = 2 pi k / K.
NumericalRangeSample numerical_range(const ComplexMatrix& x, int samples);

/// w(X) = max_theta lambda_max(Re(e^{-i theta} X)).
double numerical_radius(const ComplexMatrix& x);

struct CentralNumericalRadius {
    cplx z_star;
    double value;
};

/// r_W(X) = min_z w(X - z 1).
CentralNumericalRadius central_numerical_radius(const ComplexMatrix& x);

struct RangeMembership {
    bool member;
    /// min_phi lambda_max(Re(e^{i phi} X)) - Re(e^{i phi} z)
    double margin;
};

RangeMembership membership_in_range(const ComplexMatrix& x, cplx z, int angles = 720);

}  // namespace varbound

#endif
