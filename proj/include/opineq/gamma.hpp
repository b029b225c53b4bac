#pragma once

#include "opineq/error.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace opineq {

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

/// Γ(z) for complex z; reflection Γ(z)Γ(1-z) = π / sin(πz) below Re z = 1/2.
inline std::complex<double> complex_gamma(std::complex<double> z) {
    using std::numbers::pi;
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - std::complex<double>(nearest, 0.0)) <= 1e-12) {
        throw Error(ErrorCode::PoleError, "Gamma has a pole at " + std::to_string(nearest));
    }
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    }
    const std::complex<double> w = z - 1.0;
    std::complex<double> series = kLanczosCoefficients[0];
    for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
        series += kLanczosCoefficients[k] / (w + static_cast<double>(k));
    }
    const std::complex<double> t = w + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, w + 0.5) * std::exp(-t) * series;
}

/// 1/Γ(z), entire; exactly zero at the nonpositive integers.
inline std::complex<double> reciprocal_gamma(std::complex<double> z) {
    using std::numbers::pi;
    if (z.real() < 0.5) {
        const double nearest = std::round(z.real());
        if (z.imag() == 0.0 && z.real() == nearest) return 0.0;
        return std::sin(pi * z) * complex_gamma(1.0 - z) / pi;
    }
    return 1.0 / complex_gamma(z);
}

} // namespace opineq
