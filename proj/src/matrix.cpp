#include "varbound/matrix.hpp"

#include "varbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace varbound {

namespace {

void require_finite(std::span<const cplx> values) {
    for (const auto& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string("shape mismatch in ") + op + ": " + describe(a) +
                                    " vs " + describe(b));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix() : rows_(1), cols_(1), data_(1) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("entry count does not match rows*cols");
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    require_finite(diag);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    std::vector<cplx> c(diag.begin(), diag.end());
    return diagonal(std::span<const cplx>(c));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    // scaled accumulation, entries can be large in perturbation searches
    double scale = max_abs();
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z / scale);
    return scale * std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

std::vector<cplx> ComplexMatrix::column(std::size_t j) const {
    std::vector<cplx> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("shape mismatch in *: " + describe(a) + " vs " + describe(b));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v) {
    if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    std::vector<cplx> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix shifted(const ComplexMatrix& x, cplx s) {
    if (!x.is_square()) throw std::invalid_argument("shift requires a square matrix");
    ComplexMatrix y = x;
    for (std::size_t i = 0; i < y.rows(); ++i) y(i, i) -= s;
    return y;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product of unequal lengths");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m) {
    if (!m.is_square()) throw std::invalid_argument("Hermitian matrix must be square");
    const std::size_t d = m.rows();
    for (std::size_t i = 0; i < d; ++i) {
        m_(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < d; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
    }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : h_(m) {
    const double tr = h_.matrix().trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw std::invalid_argument("density matrix must have unit trace (got " + std::to_string(tr) + ")");
    }
    const auto eig = hermitian_eig(h_);
    if (eig.values.back() < -1e-10) {
        throw std::invalid_argument("density matrix must be positive semidefinite");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    auto m = ComplexMatrix::identity(d);
    m *= 1.0 / static_cast<double>(d);
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
    UnitVector u(std::vector<cplx>(psi.begin(), psi.end()));
    const std::size_t d = u.dim();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = u[i] * std::conj(u[j]);
    return DensityMatrix(m);
}

UnitVector::UnitVector(std::vector<cplx> v) : v_(std::move(v)) {
    if (v_.empty()) throw std::invalid_argument("unit vector must be non-empty");
    require_finite(v_);
    const double n = norm2(v_);
    if (n < 1e-300) throw std::invalid_argument("cannot normalize a zero vector");
    for (auto& z : v_) z /= n;
}

cplx expectation(const ComplexMatrix& x, std::span<const cplx> psi) {
    return inner(psi, x * psi);
}

cplx expectation(const ComplexMatrix& x, const DensityMatrix& rho) {
    if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
        throw std::invalid_argument("dimension mismatch between matrix and density matrix");
    }
    cplx s = 0.0;
    const auto& r = rho.matrix();
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t k = 0; k < rho.dim(); ++k) s += r(i, k) * x(k, i);
    return s;
}

ComplexMatrix kron_identity(const ComplexMatrix& x, std::size_t d) {
    if (d == 0) throw std::invalid_argument("identity dimension must be positive");
    ComplexMatrix out(x.rows() * d, x.cols() * d);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            for (std::size_t k = 0; k < d; ++k) out(i * d + k, j * d + k) = x(i, j);
    return out;
}

std::string describe(const ComplexMatrix& x) {
    std::ostringstream os;
    os << x.rows() << "x" << x.cols();
    return os.str();
}

}  // namespace varbound
