#pragma once

// Functional calculus of the superoperators T ↦ XT ± TY for Hermitian X, Y.
//
// In the eigenbases X = U Λ Uᴴ, Y = V M Vᴴ every such function acts as a Schur
// multiplier: f(L_X ± R_Y)(T) = U [K ⊙ (Uᴴ T V)] Vᴴ with K_ij = f(λ_i ± μ_j).
// superop_flatten() builds the same map as an explicit (nm)×(nm) matrix; it is
// the brute-force oracle for the Schur route.

#include "opineq/linalg.hpp"
#include "opineq/norms.hpp"
#include "opineq/random.hpp"

#include <cmath>
#include <complex>
#include <cstdint>

namespace opineq {

enum class Sign { Plus, Minus };

inline double sign_value(Sign s) noexcept { return s == Sign::Plus ? 1.0 : -1.0; }

/// A = L_X + sign·R_Y, held through the spectral data of X and Y.
class TwoSidedOperator {
public:
    TwoSidedOperator(const ComplexMatrix& x, const ComplexMatrix& y, Sign sign = Sign::Plus)
        : x_(hermitian_part_checked(x)), y_(hermitian_part_checked(y)), left_(hermitian_eigendecompose(x_)),
          right_(hermitian_eigendecompose(y_)), sign_(sign) {}

    const SpectralDecomposition& left_spectrum() const noexcept { return left_; }
    const SpectralDecomposition& right_spectrum() const noexcept { return right_; }
    const ComplexMatrix& left() const noexcept { return x_; }
    const ComplexMatrix& right() const noexcept { return y_; }
    Sign sign() const noexcept { return sign_; }

    std::size_t rows() const noexcept { return left_.dim(); }
    std::size_t cols() const noexcept { return right_.dim(); }

    /// λ_i + sign·μ_j
    double point(std::size_t i, std::size_t j) const noexcept {
        return left_.eigenvalues[i] + sign_value(sign_) * right_.eigenvalues[j];
    }

    std::vector<double> spectrum() const {
        std::vector<double> out;
        out.reserve(rows() * cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) out.push_back(point(i, j));
        return out;
    }

private:
    ComplexMatrix x_;
    ComplexMatrix y_;
    SpectralDecomposition left_;
    SpectralDecomposition right_;
    Sign sign_;
};

namespace detail {

inline void require_ideal_shape(const ComplexMatrix& t, std::size_t rows, std::size_t cols) {
    if (t.rows() != rows || t.cols() != cols) {
        throw Error(ErrorCode::ShapeMismatch, "ideal element has shape " + std::to_string(t.rows()) + "x" +
                                                  std::to_string(t.cols()) + ", expected " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
    }
}

/// U [K ⊙ (Uᴴ T V)] Vᴴ with K given entrywise by kernel(i, j).
template <class Kernel>
ComplexMatrix schur_transform(const ComplexMatrix& u, const ComplexMatrix& v, const ComplexMatrix& t,
                              Kernel&& kernel) {
    ComplexMatrix c = u.adjoint() * t * v;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) {
            const Complex k = kernel(i, j);
            if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
                throw Error(ErrorCode::DomainError, "kernel is not finite on the spectrum");
            }
            c(i, j) *= k;
        }
    }
    return u * c * v.adjoint();
}

} // namespace detail

namespace kernels {

/// sinh(z)/z with its removable singularity; five-term series for |z| < 5e-5.
inline Complex sinhc(Complex z) {
    if (std::abs(z) < 5e-5) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0 * (1.0 + z2 / 72.0)));
    }
    return std::sinh(z) / z;
}

inline double sinhc(double x) { return sinhc(Complex(x)).real(); }

/// (e^a - e^b)/(a - b), diagonal limit e^a.
inline double exp_divided_difference(double a, double b) {
    const double h = 0.5 * (a - b);
    return std::exp(0.5 * (a + b)) * sinhc(h);
}

/// sinh(s x) / (s sinh x); s = 0 means x / sinh x.
inline double sinh_ratio(double s, double x) { return sinhc(s * x) / sinhc(x); }

/// cosh(s x) / cosh x.
inline double cosh_ratio(double s, double x) { return std::cosh(s * x) / std::cosh(x); }

/// sinh(s x) / (s x cosh(r x)); s = 0 means 1 / cosh(r x).
inline double sinh_cosh_ratio(double s, double r, double x) { return sinhc(s * x) / std::cosh(r * x); }

/// s x cosh(r x) / sinh(s x).
inline double reverse_ratio(double s, double r, double x) { return std::cosh(r * x) / sinhc(s * x); }

} // namespace kernels

/// f(L_X ± R_Y)(T) as a Schur multiplier in the eigenbases of X and Y.
template <class Fn>
ComplexMatrix apply_calculus(Fn&& f, const TwoSidedOperator& op, const ComplexMatrix& t) {
    detail::require_ideal_shape(t, op.rows(), op.cols());
    return detail::schur_transform(op.left_spectrum().unitary, op.right_spectrum().unitary, t,
                                   [&](std::size_t i, std::size_t j) { return Complex(f(op.point(i, j))); });
}

/// Explicit matrix of T ↦ XT ± TY in row-major vec coordinates (index i*m + j).
inline ComplexMatrix superop_flatten(const TwoSidedOperator& op) {
    const std::size_t n = op.rows();
    const std::size_t m = op.cols();
    if (n * m > kMaxDimension) {
        throw Error(ErrorCode::SizeLimit, "flattened superoperator exceeds 64x64");
    }
    const double s = sign_value(op.sign());
    const ComplexMatrix& x = op.left();
    const ComplexMatrix& y = op.right();
    ComplexMatrix out(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t row = i * m + j;
            for (std::size_t k = 0; k < n; ++k) out(row, k * m + j) += x(i, k);
            for (std::size_t k = 0; k < m; ++k) out(row, i * m + k) += s * y(k, j);
        }
    }
    return out;
}

inline std::vector<Complex> vectorize(const ComplexMatrix& t) {
    return {t.entries().begin(), t.entries().end()};
}

inline ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(v.begin(), v.end()));
}

/// ∫₀¹ e^{(1-s)X} T e^{sY} ds, kernel (e^{λ_i} - e^{μ_j})/(λ_i - μ_j).
inline ComplexMatrix integral_mean(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& t) {
    const auto left = hermitian_eigendecompose(x);
    const auto right = hermitian_eigendecompose(y);
    detail::require_ideal_shape(t, left.dim(), right.dim());
    return detail::schur_transform(left.unitary, right.unitary, t, [&](std::size_t i, std::size_t j) {
        return Complex(kernels::exp_divided_difference(left.eigenvalues[i], right.eigenvalues[j]));
    });
}

/// Fréchet derivative of exp at Hermitian X in direction Y (Daleckii–Krein form).
inline ComplexMatrix dexp(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (!x.is_square() || y.rows() != x.rows() || y.cols() != x.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "dexp needs X square and Y of the same shape");
    }
    return integral_mean(x, x, y);
}

/// Exact operator norm of T ↦ f(A)T on the Hilbert–Schmidt ideal: max |f(λ_i ± μ_j)|.
template <class Fn>
double induced_norm_p2(Fn&& f, const TwoSidedOperator& op) {
    double best = 0.0;
    for (std::size_t i = 0; i < op.rows(); ++i) {
        for (std::size_t j = 0; j < op.cols(); ++j) {
            const double value = std::abs(Complex(f(op.point(i, j))));
            if (!std::isfinite(value)) throw Error(ErrorCode::DomainError, "kernel is not finite on the spectrum");
            best = std::max(best, value);
        }
    }
    return best;
}

/// Sampled lower bound on ‖f(A)‖ as an operator on (M, spec). Trials alternate between
/// Gaussian and rank-one test matrices; the sample stream depends only on `seed`.
template <class Fn>
double induced_norm_lower_estimate(Fn&& f, const TwoSidedOperator& op, const NormSpec& spec, std::size_t trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidParameter, "trials must be >= 1");
    const std::size_t n = op.rows();
    const std::size_t m = op.cols();
    Rng rng(seed);
    double best = 0.0;
    for (std::size_t k = 0; k < trials; ++k) {
        ComplexMatrix t(n, m);
        if (k % 2 == 0) {
            for (auto& z : t.entries()) z = rng.complex_normal();
        } else {
            std::vector<Complex> a(n), b(m);
            for (auto& z : a) z = rng.complex_normal();
            for (auto& z : b) z = rng.complex_normal();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j) t(i, j) = a[i] * std::conj(b[j]);
        }
        const double denom = norm(t, spec);
        if (denom == 0.0) continue;
        best = std::max(best, norm(apply_calculus(f, op, t), spec) / denom);
    }
    return best;
}

} // namespace opineq
