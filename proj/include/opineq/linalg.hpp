#pragma once

#include "opineq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace opineq {

/// Eigen-data of a Hermitian matrix: H = U diag(eigenvalues) Uᴴ, eigenvalues descending.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix unitary;

    std::size_t dim() const noexcept { return eigenvalues.size(); }
    double max_eigenvalue() const { return eigenvalues.front(); }
    double min_eigenvalue() const { return eigenvalues.back(); }
    double spectral_radius() const {
        return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
    }

    ComplexMatrix reconstruct() const;
};

enum class PolarSide { Left, Right };

struct PolarDecomposition {
    ComplexMatrix positive_part;
    ComplexMatrix unitary_part;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Returns (H + Hᴴ)/2 after checking that H is Hermitian up to kHermitianTolerance.
inline ComplexMatrix hermitian_part_checked(const ComplexMatrix& h) {
    if (!h.is_square()) throw Error(ErrorCode::NonHermitianInput, "matrix is not square");
    const ComplexMatrix ha = h.adjoint();
    const double asym = (h - ha).frobenius_norm();
    if (asym > kHermitianTolerance * (1.0 + h.frobenius_norm())) {
        throw Error(ErrorCode::NonHermitianInput, "asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }
    ComplexMatrix out = h + ha;
    out *= 0.5;
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) = out(i, i).real();
    return out;
}

namespace detail {

inline double off_diagonal_mass(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// Rotates columns p, q of `m` by the 2x2 block [[jpp, jpq], [jqp, jqq]].
inline void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, Complex jpp, Complex jpq, Complex jqp,
                           Complex jqq) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const Complex mkp = m(k, p);
        const Complex mkq = m(k, q);
        m(k, p) = mkp * jpp + mkq * jqp;
        m(k, q) = mkp * jpq + mkq * jqq;
    }
}

// Fixes the phase of each column so that its first largest-modulus entry is real positive.
inline void normalize_column_phases(ComplexMatrix& u) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
        double biggest = 0.0;
        for (std::size_t i = 0; i < u.rows(); ++i) biggest = std::max(biggest, std::abs(u(i, j)));
        if (biggest == 0.0) continue;
        std::size_t pivot = 0;
        for (std::size_t i = 0; i < u.rows(); ++i) {
            if (std::abs(u(i, j)) >= biggest * (1.0 - 1e-12)) {
                pivot = i;
                break;
            }
        }
        const Complex phase = std::conj(u(pivot, j)) / std::abs(u(pivot, j));
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) *= phase;
        u(pivot, j) = u(pivot, j).real();
    }
}

} // namespace detail

/// Cyclic complex Jacobi. Throws NonHermitianInput or ConvergenceFailure.
inline SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& h) {
    ComplexMatrix a = hermitian_part_checked(h);
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kJacobiTolerance * a.frobenius_norm();

    int sweep = 0;
    while (detail::off_diagonal_mass(a) > threshold) {
        if (++sweep > kJacobiMaxSweeps) {
            throw Error(ErrorCode::ConvergenceFailure, "Jacobi sweep limit reached");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double mod = std::abs(b);
                if (mod == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mod);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex phase = std::conj(b) / mod; // e^{-iφ}
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * phase;
                const Complex jqq = c * phase;

                detail::rotate_columns(a, p, q, jpp, jpq, jqp, jqq);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * mod;
                a(q, q) = aqq + t * mod;
                detail::rotate_columns(v, p, q, jpp, jpq, jqp, jqq);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.unitary(i, k) = v(i, order[k]);
    }
    detail::normalize_column_phases(out.unitary);
    return out;
}

/// U · diag(values) · Uᴴ for a unitary U.
inline ComplexMatrix conjugate_diagonal(const ComplexMatrix& u, std::span<const Complex> values) {
    const std::size_t n = u.rows();
    ComplexMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) = u(i, k) * values[k];
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += scaled(i, k) * std::conj(u(j, k));
            out(i, j) = acc;
        }
    }
    return out;
}

inline ComplexMatrix SpectralDecomposition::reconstruct() const {
    std::vector<Complex> values(eigenvalues.begin(), eigenvalues.end());
    return conjugate_diagonal(unitary, values);
}

/// Singular values, descending. Eigenvectors V of the smaller Gram matrix are recovered
/// into columns of AV (or AᴴU), whose norms are the singular values. Column norms keep
/// small singular values accurate to ~eps·σ_max instead of ~sqrt(eps)·σ_max.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const bool tall = a.rows() >= a.cols();
    const ComplexMatrix gram = tall ? a.adjoint() * a : a * a.adjoint();
    const auto eig = hermitian_eigendecompose(gram);
    const ComplexMatrix columns = tall ? a * eig.unitary : a.adjoint() * eig.unitary;
    std::vector<double> out(eig.dim());
    for (std::size_t k = 0; k < out.size(); ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < columns.rows(); ++i) sum += std::norm(columns(i, k));
        out[k] = std::sqrt(sum);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Operator (spectral) norm.
inline double operator_norm(const ComplexMatrix& a) { return singular_values(a).front(); }

/// Applies a scalar function to the spectrum: U f(Λ) Uᴴ.
template <class Fn>
ComplexMatrix apply_spectral(const SpectralDecomposition& eig, Fn&& f) {
    std::vector<Complex> values(eig.dim());
    bool real_valued = true;
    for (std::size_t k = 0; k < eig.dim(); ++k) {
        values[k] = Complex(f(eig.eigenvalues[k]));
        if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag())) {
            throw Error(ErrorCode::DomainError,
                        "function is not finite at eigenvalue " + std::to_string(eig.eigenvalues[k]));
        }
        real_valued = real_valued && values[k].imag() == 0.0;
    }
    ComplexMatrix out = conjugate_diagonal(eig.unitary, values);
    if (real_valued) {
        ComplexMatrix sym = out + out.adjoint();
        sym *= 0.5;
        return sym;
    }
    return out;
}

template <class Fn>
ComplexMatrix matrix_function_hermitian(Fn&& f, const ComplexMatrix& h) {
    return apply_spectral(hermitian_eigendecompose(h), std::forward<Fn>(f));
}

inline ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t = 1.0) {
    return matrix_function_hermitian([t](double x) { return std::exp(t * x); }, h);
}

inline void require_positive_definite(const SpectralDecomposition& eig) {
    if (!(eig.min_eigenvalue() > 0.0)) {
        throw Error(ErrorCode::NotPositiveDefinite,
                    "smallest eigenvalue " + std::to_string(eig.min_eigenvalue()) + " is not positive");
    }
}

inline ComplexMatrix logm_positive(const ComplexMatrix& h) {
    const auto eig = hermitian_eigendecompose(h);
    require_positive_definite(eig);
    return apply_spectral(eig, [](double x) { return std::log(x); });
}

inline ComplexMatrix powm_positive(const ComplexMatrix& h, double exponent) {
    const auto eig = hermitian_eigendecompose(h);
    if (exponent == std::floor(exponent) && exponent >= 0.0) {
        return apply_spectral(eig, [exponent](double x) { return std::pow(x, exponent); });
    }
    require_positive_definite(eig);
    return apply_spectral(eig, [exponent](double x) { return std::pow(x, exponent); });
}

/// Gauss–Jordan with partial pivoting.
inline ComplexMatrix inverse(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse needs a square matrix");
    const std::size_t n = a.rows();
    ComplexMatrix m = a;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    double largest = 0.0;
    for (const auto& z : a.entries()) largest = std::max(largest, std::abs(z));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
        if (!(std::abs(m(pivot, col)) > 1e-14 * largest)) {
            throw Error(ErrorCode::SingularMatrix, "matrix is numerically singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Complex d = 1.0 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Complex factor = m(i, col);
            if (factor == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= factor * m(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Left: A = P·U with P = (AAᴴ)^{1/2}. Right: A = U·P with P = (AᴴA)^{1/2}.
inline PolarDecomposition polar_decompose(const ComplexMatrix& a, PolarSide side) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "polar decomposition needs a square matrix");
    const ComplexMatrix gram = side == PolarSide::Right ? a.adjoint() * a : a * a.adjoint();
    const auto eig = hermitian_eigendecompose(gram);
    const double smax = std::sqrt(std::max(eig.max_eigenvalue(), 0.0));
    const double smin = std::sqrt(std::max(eig.min_eigenvalue(), 0.0));
    if (!(smin >= 1e-10 * smax) || smax == 0.0) {
        throw Error(ErrorCode::SingularMatrix, "smallest singular value below 1e-10 of the largest");
    }
    ComplexMatrix p = apply_spectral(eig, [](double x) { return std::sqrt(x); });
    const ComplexMatrix p_inv = apply_spectral(eig, [](double x) { return 1.0 / std::sqrt(x); });
    ComplexMatrix u = side == PolarSide::Right ? a * p_inv : p_inv * a;
    return {std::move(p), std::move(u)};
}

} // namespace opineq
