#include "vblast/linalg.hpp"

#include <cmath>

namespace vblast {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entries length must equal rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    ComplexVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix ComplexMatrix::without_column(std::size_t j) const {
    ComplexMatrix m(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t out = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            if (k == j) continue;
            m(i, out++) = (*this)(i, k);
        }
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

ComplexMatrix hermitian(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions disagree");
    }
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matvec: dimensions disagree");
    }
    ComplexVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

namespace {

// In-place LU with partial pivoting on an augmented system [A | B].
// B holds nrhs right-hand sides as columns; on return B holds the solutions.
void solve_in_place(ComplexMatrix a, ComplexMatrix& b) {
    const std::size_t n = a.rows();
    double max_entry = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) max_entry = std::max(max_entry, std::abs(a(i, j)));
    const double threshold = 1e-12 * max_entry;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(a(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > threshold) || best == 0.0) {
            throw SingularMatrixError("solve: pivot below singularity threshold");
        }
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
        }
        const Complex pivot = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex factor = a(r, k) / pivot;
            if (factor == Complex(0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(r, j) -= factor * a(k, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= factor * b(k, j);
        }
    }
    // back substitution
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t ri = n; ri-- > 0;) {
            Complex acc = b(ri, col);
            for (std::size_t j = ri + 1; j < n; ++j) acc -= a(ri, j) * b(j, col);
            b(ri, col) = acc / a(ri, ri);
        }
    }
}

}  // namespace

ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("solve: matrix must be square");
    }
    if (a.rows() != b.size()) {
        throw std::invalid_argument("solve: right-hand side length must equal matrix order");
    }
    ComplexMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    solve_in_place(a, rhs);
    return rhs.column(0);
}

ComplexMatrix regularized_inverse(const ComplexMatrix& h, double lambda) {
    if (lambda < 0.0) {
        throw std::invalid_argument("regularized_inverse: lambda must be nonnegative");
    }
    const ComplexMatrix hh = hermitian(h);
    ComplexMatrix gram = matmul(hh, h);
    for (std::size_t i = 0; i < gram.rows(); ++i) gram(i, i) += lambda;
    ComplexMatrix rhs = hh;  // solve (gram) W = H^H, one column at a time
    solve_in_place(gram, rhs);
    return rhs;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& h) {
    if (h.rows() < h.cols()) {
        throw std::invalid_argument("pseudo_inverse: matrix must have rows >= cols");
    }
    return regularized_inverse(h, 0.0);
}

std::vector<double> row_norms(const ComplexMatrix& a) {
    std::vector<double> norms(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::norm(a(i, j));
        norms[i] = std::sqrt(acc);
    }
    return norms;
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const Complex& z : a.entries()) acc += std::norm(z);
    return std::sqrt(acc);
}

double vector_norm(const ComplexVector& v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

}  // namespace vblast
