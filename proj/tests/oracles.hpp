// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's code paths: naive loops, Gauss-Jordan
// instead of LU, integer-decoded enumeration instead of recursion, and a
// series/continued-fraction erfc instead of the platform routine.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vblast/linalg.hpp"
#include "vblast/modem.hpp"

namespace oracle {

using vblast::Complex;
using vblast::ComplexMatrix;
using vblast::ComplexVector;

// ---------------------------------------------------------------------------
// high-precision erfc: Taylor series below 2, Lentz continued fraction above
// ---------------------------------------------------------------------------

inline long double erf_series(long double x) {
    const long double two_over_sqrt_pi = 1.1283791670955125738961589031215L;
    long double term = x;
    long double sum = x;
    const long double x2 = x * x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        const long double contrib = term / (2 * n + 1);
        sum += contrib;
        if (std::fabs(contrib) < 1e-25L * std::fabs(sum)) break;
    }
    return two_over_sqrt_pi * sum;
}

inline long double erfc_continued_fraction(long double x) {
    // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    const long double tiny = 1e-300L;
    long double f = x, c = x, d = 0.0L;
    for (int n = 1; n < 400; ++n) {
        const long double a = n / 2.0L;
        d = x + a * d;
        if (d == 0.0L) d = tiny;
        c = x + a / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 1e-22L) break;
    }
    const long double sqrt_pi = 1.7724538509055160272981674833411L;
    return std::exp(-x * x) / (sqrt_pi * f);
}

inline double erfc_reference(double x) {
    if (x < 0.0) return 2.0 - erfc_reference(-x);
    if (x < 2.0) return static_cast<double>(1.0L - erf_series(x));
    return static_cast<double>(erfc_continued_fraction(x));
}

inline double q_reference(double x) { return 0.5 * erfc_reference(x / std::sqrt(2.0)); }

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature
// ---------------------------------------------------------------------------

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_step(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           simpson_step(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fb, fm, whole, tol, 60);
}

// ---------------------------------------------------------------------------
// naive linear algebra (element-wise, Gauss-Jordan)
// ---------------------------------------------------------------------------

inline ComplexMatrix naive_hermitian(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(j, i) = Complex(a(i, j).real(), -a(i, j).imag());
    return r;
}

inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

inline ComplexVector naive_matvec(const ComplexMatrix& a, const ComplexVector& x) {
    ComplexVector y(a.rows(), Complex(0.0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Gauss-Jordan with partial pivoting on the augmented [A | I].
inline ComplexMatrix naive_inverse(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    ComplexMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1.0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(aug(r, k)) > std::abs(aug(piv, k))) piv = r;
        if (piv != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(k, j), aug(piv, j));
        const Complex pivot = aug(k, k);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(k, j) /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Complex factor = aug(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= factor * aug(k, j);
        }
    }
    ComplexMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline ComplexMatrix naive_regularized_inverse(const ComplexMatrix& h, double lambda) {
    const ComplexMatrix hh = naive_hermitian(h);
    ComplexMatrix gram = naive_matmul(hh, h);
    for (std::size_t i = 0; i < gram.rows(); ++i) gram(i, i) += lambda;
    return naive_matmul(naive_inverse(gram), hh);
}

inline ComplexMatrix naive_pinv(const ComplexMatrix& h) {
    return naive_regularized_inverse(h, 0.0);
}

// ---------------------------------------------------------------------------
// detector oracles
// ---------------------------------------------------------------------------

inline std::size_t naive_slice(Complex s, const vblast::Constellation& c) {
    std::size_t best = 0;
    double best_d = 1e300;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const Complex d = s - c.points[i];
        const double dist = d.real() * d.real() + d.imag() * d.imag();
        if (dist < best_d) {
            best_d = dist;
            best = i;
        }
    }
    return best;
}

// Exhaustive search by integer-decoded candidates, most significant layer
// first so candidate order is lexicographic in the index sequence.
inline std::vector<std::size_t> brute_force_ml(const ComplexVector& y, const ComplexMatrix& h,
                                               const vblast::Constellation& c) {
    const std::size_t nt = h.cols();
    const std::size_t order = c.points.size();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < nt; ++j) total *= order;

    std::vector<std::size_t> best;
    double best_metric = 1e300;
    std::vector<std::size_t> digits(nt);
    for (std::uint64_t cand = 0; cand < total; ++cand) {
        std::uint64_t rem = cand;
        for (std::size_t j = nt; j-- > 0;) {
            digits[j] = rem % order;
            rem /= order;
        }
        double metric = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < nt; ++j) acc += h(i, j) * c.points[digits[j]];
            const Complex d = y[i] - acc;
            metric += d.real() * d.real() + d.imag() * d.imag();
        }
        if (metric < best_metric) {
            best_metric = metric;
            best = digits;
        }
    }
    return best;
}

struct NaiveSicOutput {
    std::vector<std::size_t> symbol_indices;
    std::vector<std::size_t> order;
};

// Reference ordered SIC that rebuilds the deflated channel from the original
// matrix every round and uses only the naive helpers above.
inline NaiveSicOutput naive_sic(const ComplexVector& y, const ComplexMatrix& h, double lambda,
                                const vblast::Constellation& c, bool mmse_nulling) {
    const std::size_t nt = h.cols();
    std::vector<std::size_t> undetected(nt);
    for (std::size_t j = 0; j < nt; ++j) undetected[j] = j;

    NaiveSicOutput out;
    out.symbol_indices.assign(nt, 0);
    ComplexVector residual = y;

    while (!undetected.empty()) {
        ComplexMatrix sub(h.rows(), undetected.size());
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < undetected.size(); ++j) sub(i, j) = h(i, undetected[j]);

        const ComplexMatrix filter =
            mmse_nulling ? naive_regularized_inverse(sub, lambda) : naive_pinv(sub);

        std::size_t sel = 0;
        double sel_norm = 1e300;
        for (std::size_t r = 0; r < filter.rows(); ++r) {
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < filter.cols(); ++i) norm_sq += std::norm(filter(r, i));
            if (norm_sq < sel_norm) {
                sel_norm = norm_sq;
                sel = r;
            }
        }

        Complex est = 0.0;
        for (std::size_t i = 0; i < residual.size(); ++i) est += filter(sel, i) * residual[i];
        const std::size_t point = naive_slice(est, c);

        const std::size_t layer = undetected[sel];
        out.symbol_indices[layer] = point;
        out.order.push_back(layer);
        for (std::size_t i = 0; i < residual.size(); ++i)
            residual[i] -= h(i, layer) * c.points[point];
        undetected.erase(undetected.begin() + static_cast<std::ptrdiff_t>(sel));
    }
    return out;
}

// ---------------------------------------------------------------------------
// random test data (independent of the library's RngStream)
// ---------------------------------------------------------------------------

inline ComplexMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(dist(gen), dist(gen));
    return m;
}

inline ComplexVector random_vector(std::mt19937& gen, std::size_t len) {
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    ComplexVector v(len);
    for (Complex& z : v) z = Complex(dist(gen), dist(gen));
    return v;
}

}  // namespace oracle
