#ifndef VARBOUND_MATRIX_HPP
#define VARBOUND_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace varbound {

using cplx = std::complex<double>;

/// Raised when an iterative kernel exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//
// Dense complex matrix, row-major. Entries are always finite and both
// dimensions are at least 1.
//
class ComplexMatrix {
public:
    /// 1x1 zero matrix.
    ComplexMatrix();
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// Largest entry modulus.
    double max_abs() const;

    std::vector<cplx> column(std::size_t j) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v);

/// X - s*1 for square X.
ComplexMatrix shifted(const ComplexMatrix& x, cplx s);

/// <a, b> = sum conj(a_i) b_i
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm2(std::span<const cplx> v);

/// Hermitian matrix; construction symmetrizes as (H + H*)/2.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& m);

    std::size_t dim() const noexcept { return m_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    double operator()(std::size_t i) const { return m_(i, i).real(); }

private:
    ComplexMatrix m_;
};

/// Positive semidefinite, unit trace.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    std::size_t dim() const noexcept { return h_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return h_; }
    const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }

    static DensityMatrix maximally_mixed(std::size_t d);
    static DensityMatrix pure(std::span<const cplx> psi);

private:
    HermitianMatrix h_;
};

/// Unit-norm complex vector; the constructor normalizes and rejects zero input.
class UnitVector {
public:
    explicit UnitVector(std::vector<cplx> v);

    std::size_t dim() const noexcept { return v_.size(); }
    std::span<const cplx> values() const noexcept { return v_; }
    cplx operator[](std::size_t i) const { return v_[i]; }

private:
    std::vector<cplx> v_;
};

/// <psi, X psi>
cplx expectation(const ComplexMatrix& x, std::span<const cplx> psi);
/// Tr[rho X]
cplx expectation(const ComplexMatrix& x, const DensityMatrix& rho);

/// X (x) 1_D
ComplexMatrix kron_identity(const ComplexMatrix& x, std::size_t d);

std::string describe(const ComplexMatrix& x);

}  // namespace varbound

#endif
