#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace vblast {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Thrown when Gaussian elimination meets a pivot below the relative
/// singularity threshold (1e-12 times the largest initial entry magnitude).
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense complex matrix, row-major storage, double precision.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexVector column(std::size_t j) const;

    /// Copy with column j removed (used by SIC deflation).
    ComplexMatrix without_column(std::size_t j) const;

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Conjugate transpose.
ComplexMatrix hermitian(const ComplexMatrix& a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrixError when a pivot magnitude falls below
/// 1e-12 times the largest initial entry magnitude.
ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b);

/// Moore-Penrose pseudo-inverse of a full-column-rank tall matrix,
/// computed as (H^H H)^-1 H^H via the Gram matrix and column solves.
ComplexMatrix pseudo_inverse(const ComplexMatrix& h);

/// (lambda I + H^H H)^-1 H^H with I of size H.cols. Always succeeds for
/// lambda > 0; lambda == 0 reduces to pseudo_inverse.
ComplexMatrix regularized_inverse(const ComplexMatrix& h, double lambda);

/// Euclidean norm of each row.
std::vector<double> row_norms(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
double vector_norm(const ComplexVector& v);

}  // namespace vblast
