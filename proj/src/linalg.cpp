#include "varbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace varbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 100;

struct Rotation {
    double c;
    double s;
    cplx omega;  // phase that makes the pivot real
    double t;
};

// Rotation V = [[c, s], [-s*omega, c*omega]] diagonalizing [[app, apq], [conj(apq), aqq]].
Rotation jacobi_rotation(double app, double aqq, cplx apq) {
    const double b = std::abs(apq);
    const cplx omega = std::conj(apq) / b;
    const double theta = (aqq - app) / (2.0 * b);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, omega, t};
}

void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const cplx mp = m(k, p);
        const cplx mq = m(k, q);
        m(k, p) = r.c * mp - r.s * r.omega * mq;
        m(k, q) = r.s * mp + r.c * r.omega * mq;
    }
}

void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    const cplx w = std::conj(r.omega);
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const cplx mp = m(p, k);
        const cplx mq = m(q, k);
        m(p, k) = r.c * mp - r.s * w * mq;
        m(q, k) = r.s * mp + r.c * w * mq;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One-sided (Hestenes) Jacobi: orthogonalize the columns of a tall matrix.
std::vector<double> column_orthogonalize(ComplexMatrix u) {
    const std::size_t n = u.cols();
    const std::size_t m = u.rows();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    alpha += std::norm(u(k, p));
                    beta += std::norm(u(k, q));
                    gamma += std::conj(u(k, p)) * u(k, q);
                }
                if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) continue;
                rotated = true;
                rotate_columns(u, p, q, jacobi_rotation(alpha, beta, gamma));
            }
        }
        if (!rotated) {
            std::vector<double> sv(n);
            for (std::size_t j = 0; j < n; ++j) sv[j] = norm2(u.column(j));
            std::sort(sv.begin(), sv.end(), std::greater<>());
            return sv;
        }
    }
    throw ConvergenceError("one-sided Jacobi SVD did not converge in " + std::to_string(kMaxSweeps) +
                           " sweeps (" + describe(u) + ")");
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
    const std::size_t d = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(d);
    const double scale = a.frobenius_norm();

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 4.0 * kEps * scale) break;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                if (apq == cplx(0.0)) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const auto r = jacobi_rotation(app, aqq, apq);
                rotate_columns(a, p, q, r);
                rotate_rows(a, p, q, r);
                a(p, p) = app - r.t * std::abs(apq);
                a(q, q) = aqq + r.t * std::abs(apq);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                rotate_columns(v, p, q, r);
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw ConvergenceError("Jacobi eigensolver did not converge: off-diagonal norm " +
                               std::to_string(off_diagonal_norm(a)) + " relative to " +
                               std::to_string(scale) + " after " + std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(d), ComplexMatrix(d, d)};
    for (std::size_t k = 0; k < d; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < d; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

TopEigenpair top_eigenpair(const HermitianMatrix& h) {
    auto eig = hermitian_eig(h);
    return {eig.values.front(), eig.vectors.column(0)};
}

double lambda_max(const HermitianMatrix& h) { return hermitian_eig(h).values.front(); }

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] >= 0.0)) throw std::invalid_argument("singular values must be non-negative");
        if (i > 0 && values_[i] > values_[i - 1]) {
            throw std::invalid_argument("singular values must be sorted non-increasing");
        }
    }
}

SingularSpectrum singular_values(const ComplexMatrix& x) {
    if (x.rows() >= x.cols()) return SingularSpectrum(column_orthogonalize(x));
    return SingularSpectrum(column_orthogonalize(x.adjoint()));
}

std::string_view to_string(ModulusKind kind) {
    switch (kind) {
        case ModulusKind::L: return "L";
        case ModulusKind::R: return "R";
        case ModulusKind::C: return "C";
    }
    return "?";
}

ModulusKind parse_modulus_kind(std::string_view s) {
    if (s == "L" || s == "l") return ModulusKind::L;
    if (s == "R" || s == "r") return ModulusKind::R;
    if (s == "C" || s == "c") return ModulusKind::C;
    throw std::invalid_argument("unknown modulus kind '" + std::string(s) + "' (expected L, R or C)");
}

HermitianMatrix modulus_squared(const ComplexMatrix& x, ModulusKind kind) {
    if (!x.is_square()) throw std::invalid_argument("modulus requires a square matrix");
    const ComplexMatrix xa = x.adjoint();
    switch (kind) {
        case ModulusKind::L: return HermitianMatrix(xa * x);
        case ModulusKind::R: return HermitianMatrix(x * xa);
        case ModulusKind::C: {
            ComplexMatrix m = xa * x + x * xa;
            m *= 0.5;
            return HermitianMatrix(m);
        }
    }
    throw std::invalid_argument("bad modulus kind");
}

HermitianMatrix psd_sqrt(const HermitianMatrix& h) {
    const auto eig = hermitian_eig(h);
    const std::size_t d = h.dim();
    const double floor = -1e-10 * (1.0 + std::abs(eig.values.front()));
    std::vector<double> roots(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double lam = eig.values[k];
        if (lam < floor) {
            throw std::invalid_argument("matrix square root of a non-PSD matrix (eigenvalue " +
                                        std::to_string(lam) + ")");
        }
        roots[k] = std::sqrt(std::max(lam, 0.0));
    }
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                s += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
            out(i, j) = s;
        }
    return HermitianMatrix(out);
}

HermitianMatrix modulus(const ComplexMatrix& x, ModulusKind kind) {
    return psd_sqrt(modulus_squared(x, kind));
}

CartesianParts cartesian_parts(const ComplexMatrix& x) {
    if (!x.is_square()) throw std::invalid_argument("Cartesian decomposition requires a square matrix");
    const ComplexMatrix xa = x.adjoint();
    ComplexMatrix a = x + xa;
    a *= 0.5;
    ComplexMatrix b = x - xa;
    b *= cplx(0.0, -0.5);
    return {HermitianMatrix(a), HermitianMatrix(b)};
}

double normality_defect(const ComplexMatrix& x) {
    const ComplexMatrix xa = x.adjoint();
    return (x * xa - xa * x).max_abs();
}

bool is_normal(const ComplexMatrix& x, double tol) {
    if (!x.is_square()) return false;
    const double scale = x.max_abs();
    return normality_defect(x) <= tol * (1.0 + scale * scale);
}

std::vector<cplx> normal_eigenvalues(const ComplexMatrix& x) {
    if (!is_normal(x, 1e-9)) throw std::invalid_argument("normal_eigenvalues requires a normal matrix");
    const auto parts = cartesian_parts(x);
    const std::size_t d = x.rows();
    const double scale = 1.0 + x.max_abs();
    // generic mixing weights; a second or third is used if the first hits a near-degeneracy
    for (double t : {0.5772156649015329, 1.3247179572447460, -0.7390851332151607}) {
        ComplexMatrix mix = parts.real.matrix();
        mix += t * parts.imag.matrix();
        const auto eig = hermitian_eig(HermitianMatrix(mix));
        std::vector<cplx> lambdas(d);
        double worst = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const auto v = eig.vectors.column(k);
            lambdas[k] = expectation(x, v);
            auto xv = x * std::span<const cplx>(v);
            for (std::size_t i = 0; i < d; ++i) xv[i] -= lambdas[k] * v[i];
            worst = std::max(worst, norm2(xv));
        }
        if (worst <= 1e-9 * scale) return lambdas;
    }
    throw ConvergenceError("could not separate the spectrum of the normal matrix");
}

ComplexMatrix identity(std::size_t d) { return ComplexMatrix::identity(d); }

ComplexMatrix basis_matrix(std::size_t i, std::size_t j, std::size_t d) {
    if (i < 1 || j < 1 || i > d || j > d) {
        throw std::invalid_argument("basis_matrix indices are 1-based and must not exceed d");
    }
    ComplexMatrix m(d, d);
    m(i - 1, j - 1) = 1.0;
    return m;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix f_matrix(std::size_t d) {
    if (d < 2) throw std::invalid_argument("F = Diag(1,1,0,...) needs d >= 2");
    ComplexMatrix m(d, d);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

}  // namespace varbound
