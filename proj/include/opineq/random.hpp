#pragma once

#include "opineq/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace opineq {

// Reproducibility contract (mirrored in README):
//   mix64(x)      SplitMix64 finalizer
//   Rng(seed)     counter-based: the k-th draw (k = 1, 2, ...) is mix64(seed + k * 0x9E3779B97F4A7C15)
//   uniform()     (draw >> 11) * 2^-53, in [0, 1)
//   complex normal: u1 = 1 - uniform(), u2 = uniform(), r = sqrt(-log(u1)),
//                 value = r * (cos(2π u2) + i sin(2π u2))   (E|z|^2 = 1)

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// 64-bit FNV-1a, used to fold identifiers into seeds.
constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed for one sample of a campaign: folds (master, case, dim, norm, index) through mix64.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view case_id, std::uint64_t dim,
                                    std::string_view norm_id, std::uint64_t index) noexcept {
    std::uint64_t h = mix64(master ^ fnv1a(case_id));
    h = mix64(h ^ dim);
    h = mix64(h ^ fnv1a(norm_id));
    return mix64(h ^ index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next() noexcept { return mix64(seed_ + (++counter_) * kGolden); }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Standard complex normal, E|z|^2 = 1.
    Complex complex_normal() noexcept {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(angle), r * std::sin(angle)};
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

inline void check_sample_dim(std::size_t dim) {
    if (dim < 1 || dim > kMaxDimension) {
        throw Error(ErrorCode::SizeLimit, "sample dimension must be in [1, 64]");
    }
}

/// Matrix of independent standard complex normals, row-major draw order.
inline ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    check_sample_dim(rows);
    check_sample_dim(cols);
    Rng rng(seed);
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
    return g;
}

/// (G + Gᴴ)/2 before any rescaling.
inline ComplexMatrix gaussian_hermitian(std::size_t dim, std::uint64_t seed) {
    const ComplexMatrix g = gaussian_matrix(dim, dim, seed);
    ComplexMatrix h = g + g.adjoint();
    h *= 0.5;
    for (std::size_t i = 0; i < dim; ++i) h(i, i) = h(i, i).real();
    return h;
}

/// Hermitian sample rescaled so that its spectral radius equals `scale`.
inline ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed, double scale) {
    check_sample_dim(dim);
    if (!(scale >= 0.0)) throw Error(ErrorCode::InvalidParameter, "scale must be nonnegative");
    ComplexMatrix h = gaussian_hermitian(dim, seed);
    const double radius = hermitian_eigendecompose(h).spectral_radius();
    h *= radius > 0.0 ? scale / radius : 0.0;
    return h;
}

/// exp of a random Hermitian sample; condition number <= e^{2 scale}.
inline ComplexMatrix random_positive(std::size_t dim, std::uint64_t seed, double scale) {
    return expm_hermitian(random_hermitian(dim, seed, scale));
}

/// exp(iπH) for a random Hermitian H with spectrum in [-1, 1].
inline ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    const ComplexMatrix h = random_hermitian(dim, seed, 1.0);
    return matrix_function_hermitian(
        [](double x) { return std::polar(1.0, std::numbers::pi * x); }, h);
}

/// W₁ · e^H · W₂ with random unitaries and singular values in [e^{-scale}, e^{scale}].
inline ComplexMatrix random_invertible(std::size_t dim, std::uint64_t seed, double scale) {
    Rng rng(seed);
    const auto s1 = rng.next();
    const auto s2 = rng.next();
    const auto s3 = rng.next();
    return random_unitary(dim, s1) * random_positive(dim, s2, scale) * random_unitary(dim, s3);
}

} // namespace opineq
