#pragma once

// Entire functions of order <= 1 whose zeros all lie on the imaginary axis.
//
// Root convention: a root is stored as the real number t with F(i t) = 0, and the
// Weierstrass product is
//     F(z) = λ e^{αz} z^n ∏ (1 - z/(i t_k)) e^{z/(i t_k)}.
// Symmetric lists hold only the positive t_k; each such root stands for the pair ±t_k,
// whose combined factor is 1 + z²/t_k². Asymmetric lists hold signed t_k ordered by |t_k|.

#include "opineq/error.hpp"
#include "opineq/gamma.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace opineq {

using Complex = std::complex<double>;

struct EntireFunctionSpec {
    std::string id;
    std::function<Complex(Complex)> closed_form;
    int zero_order = 0;
    Complex leading = 1.0;
    Complex exponent = 0.0;
    std::function<std::vector<double>(std::size_t)> roots;
    bool symmetric = false;

    Complex operator()(Complex z) const { return closed_form(z); }
};

namespace detail {

inline constexpr double kRootTolerance = 1e-12;

/// Bisection on [a, b] where f changes sign (or vanishes at an endpoint).
template <class Fn>
double bisect(Fn&& f, double a, double b) {
    double fa = f(a);
    if (fa == 0.0) return a;
    if (f(b) == 0.0) return b;
    while (b - a > kRootTolerance) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

inline Complex int_power(Complex z, int n) {
    Complex out = 1.0;
    for (int k = 0; k < n; ++k) out *= z;
    return out;
}

/// Orders a signed root list by |t|, positive before negative on ties, and keeps `count`.
inline std::vector<double> take_by_modulus(std::vector<double> roots, std::size_t count) {
    std::stable_sort(roots.begin(), roots.end(), [](double a, double b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;
    });
    roots.resize(std::min(count, roots.size()));
    return roots;
}

inline double wrap_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
}

inline bool near_angle(double theta, double target) {
    const double d = std::abs(wrap_angle(theta) - target);
    return d < 1e-12 || std::abs(d - 2.0 * std::numbers::pi) < 1e-12;
}

} // namespace detail

/// sinh(z)/z: roots kπ.
inline EntireFunctionSpec sinh_over_z() {
    EntireFunctionSpec f;
    f.id = "sinh_over_z";
    f.closed_form = [](Complex z) {
        if (std::abs(z) < 5e-5) {
            const Complex z2 = z * z;
            return Complex(1.0) + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0));
        }
        return std::sinh(z) / z;
    };
    f.roots = [](std::size_t count) {
        std::vector<double> out(count);
        for (std::size_t k = 0; k < count; ++k) out[k] = static_cast<double>(k + 1) * std::numbers::pi;
        return out;
    };
    f.symmetric = true;
    return f;
}

/// cosh z: roots (k - 1/2)π.
inline EntireFunctionSpec cosh_function() {
    EntireFunctionSpec f;
    f.id = "cosh";
    f.closed_form = [](Complex z) { return std::cosh(z); };
    f.roots = [](std::size_t count) {
        std::vector<double> out(count);
        for (std::size_t k = 0; k < count; ++k) out[k] = (static_cast<double>(k) + 0.5) * std::numbers::pi;
        return out;
    };
    f.symmetric = true;
    return f;
}

/// Roots of tan x = x, one in each (kπ, (k+1/2)π), k >= 1.
inline std::vector<double> tan_fixed_points(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double lo = static_cast<double>(k + 1) * std::numbers::pi;
        const double hi = lo + 0.5 * std::numbers::pi;
        out[k] = detail::bisect([](double x) { return x * std::cos(x) - std::sin(x); }, lo, hi);
    }
    return out;
}

/// z cosh z - sinh z = (z³/3) ∏ (1 + z²/t_k²) with tan t_k = t_k.
inline EntireFunctionSpec z_cosh_minus_sinh() {
    EntireFunctionSpec f;
    f.id = "z_cosh_minus_sinh";
    f.closed_form = [](Complex z) {
        if (std::abs(z) < 0.1) {
            // Σ_{k>=1} 2k z^{2k+1} / (2k+1)!
            const Complex z2 = z * z;
            return z * z2 / 3.0 * (1.0 + z2 / 10.0 * (1.0 + z2 / 28.0 * (1.0 + z2 / 54.0 * (1.0 + z2 / 88.0))));
        }
        return z * std::cosh(z) - std::sinh(z);
    };
    f.zero_order = 3;
    f.leading = 1.0 / 3.0;
    f.roots = tan_fixed_points;
    f.symmetric = true;
    return f;
}

/// The two parameter values at which e^{iθ}(r + e^z) + e^{-z} vanishes at the origin.
inline bool cpr_sinh_point(double r, double theta) { return r == 0.0 && detail::near_angle(theta, std::numbers::pi); }
inline bool cpr_cosh_point(double r, double theta) { return r == -2.0 && detail::near_angle(theta, 0.0); }

/// True when every root of the CPR function lies on the imaginary axis.
inline bool cpr_roots_imaginary(double r, double theta) {
    return std::abs(r * std::sin(0.5 * theta)) <= 1e-12;
}

/// F(z) = e^{iθ}(r + e^z) + e^{-z}, r ∈ [-2, 2].
inline EntireFunctionSpec cpr_function(double r, double theta) {
    if (!(r >= -2.0 && r <= 2.0)) {
        throw Error(ErrorCode::InvalidParameter, "cpr: r must lie in [-2, 2]");
    }
    if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidParameter, "cpr: theta must be finite");
    const Complex phase = std::polar(1.0, theta);

    EntireFunctionSpec f;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "cpr:r=%.17g,theta=%.17g", r, theta);
    f.id = buf;

    if (cpr_sinh_point(r, theta)) {
        f.closed_form = [](Complex z) { return -2.0 * std::sinh(z); };
        f.zero_order = 1;
        f.leading = -2.0;
    } else if (cpr_cosh_point(r, theta)) {
        f.closed_form = [](Complex z) {
            const Complex s = std::sinh(0.5 * z);
            return 4.0 * s * s;
        };
        f.zero_order = 2;
        f.leading = 1.0;
    } else {
        f.closed_form = [phase, r](Complex z) { return phase * (r + std::exp(z)) + std::exp(-z); };
        f.leading = phase * (r + 1.0) + 1.0;
        f.exponent = (phase - 1.0) / f.leading;
    }

    // F(it) = 0  <=>  r sin(θ/2) = 0  and  r cos(θ/2) + 2 cos(t + θ/2) = 0.
    const double c = r * std::cos(0.5 * theta);
    const double shift = 0.5 * theta;
    const bool imaginary = cpr_roots_imaginary(r, theta);
    f.symmetric = imaginary && (detail::near_angle(theta, 0.0) || (r == 0.0 && detail::near_angle(theta, std::numbers::pi)));
    const bool symmetric = f.symmetric;
    f.roots = [c, shift, imaginary, symmetric](std::size_t count) {
        if (!imaginary) {
            throw Error(ErrorCode::DomainError, "cpr: roots are not purely imaginary off the axes r = 0, theta = 0");
        }
        std::vector<double> all;
        const auto keep = [&](double t) {
            if (std::abs(t) < 1e-9) return; // the zero at the origin is carried by zero_order
            if (symmetric && t < 0.0) return;
            all.push_back(t);
        };
        const long span = static_cast<long>(count) + 2;
        if (std::abs(c) >= 2.0) {
            const double base = c < 0.0 ? 0.0 : std::numbers::pi;
            for (long k = -span; k <= span; ++k) {
                const double t = base + 2.0 * std::numbers::pi * static_cast<double>(k) - shift;
                keep(t);
                keep(t);
            }
        } else {
            const auto g = [c](double u) { return c + 2.0 * std::cos(u); };
            for (long m = -span; m <= span; ++m) {
                const double lo = static_cast<double>(m) * std::numbers::pi;
                keep(detail::bisect(g, lo, lo + std::numbers::pi) - shift);
            }
        }
        return detail::take_by_modulus(std::move(all), count);
    };
    return f;
}

/// F(z) = e^z - e^{iθ}: roots t = θ + 2πk.
inline EntireFunctionSpec exp_minus(double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidParameter, "exp_minus: theta must be finite");
    const double w = detail::wrap_angle(theta);
    const Complex phase = std::polar(1.0, theta);
    EntireFunctionSpec f;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "exp_minus:theta=%.17g", theta);
    f.id = buf;
    const bool at_zero = detail::near_angle(theta, 0.0);
    if (at_zero) {
        f.closed_form = [](Complex z) { return 2.0 * std::exp(0.5 * z) * std::sinh(0.5 * z); };
        f.zero_order = 1;
        f.leading = 1.0;
        f.exponent = 0.5;
    } else {
        f.closed_form = [phase](Complex z) { return std::exp(z) - phase; };
        f.leading = 1.0 - phase;
        f.exponent = 1.0 / (1.0 - phase);
    }
    f.symmetric = at_zero || detail::near_angle(theta, std::numbers::pi);
    const bool symmetric = f.symmetric;
    f.roots = [w, symmetric](std::size_t count) {
        std::vector<double> all;
        const long span = static_cast<long>(count) + 2;
        for (long k = -span; k <= span; ++k) {
            const double t = w + 2.0 * std::numbers::pi * static_cast<double>(k);
            if (std::abs(t) < 1e-9 || (symmetric && t < 0.0)) continue;
            all.push_back(t);
        }
        return detail::take_by_modulus(std::move(all), count);
    };
    return f;
}

/// F(z) = 1/Γ(1 + iz): zeros at z = ik, k >= 1, exponent iγ.
inline EntireFunctionSpec gamma_reciprocal() {
    EntireFunctionSpec f;
    f.id = "gamma_reciprocal";
    f.closed_form = [](Complex z) { return reciprocal_gamma(1.0 + Complex(0.0, 1.0) * z); };
    f.exponent = Complex(0.0, std::numbers::egamma);
    f.roots = [](std::size_t count) {
        std::vector<double> out(count);
        for (std::size_t k = 0; k < count; ++k) out[k] = static_cast<double>(k + 1);
        return out;
    };
    return f;
}

/// d/dz log(F(z)/zⁿ) at 0: central differences at h = 1e-5 and h/2, Richardson-extrapolated.
inline Complex alpha_of(const EntireFunctionSpec& f) {
    const auto g = [&](Complex z) { return f.closed_form(z) / detail::int_power(z, f.zero_order); };
    const double h = 1e-5;
    const Complex gp = g(h);
    const Complex gm = g(-h);
    const Complex g0 = 0.5 * (gp + gm);
    if (!std::isfinite(std::abs(gp)) || !std::isfinite(std::abs(gm)) || g0 == 0.0 ||
        std::abs(g0) <= 1e-3 * std::max(std::abs(gp), std::abs(gm))) {
        throw Error(ErrorCode::DomainError, f.id + ": F(z)/z^n vanishes at 0");
    }
    const auto central = [&](double step) { return std::log(g(step) / g(-step)) / (2.0 * step); };
    const Complex d1 = central(h);
    const Complex d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

/// λ e^{αz} zⁿ times the first `terms` root factors (pairs when symmetric).
inline Complex weierstrass_truncated(const EntireFunctionSpec& f, Complex z, std::size_t terms) {
    if (terms < 1) throw Error(ErrorCode::InvalidParameter, "terms must be >= 1");
    Complex product = f.leading * std::exp(f.exponent * z) * detail::int_power(z, f.zero_order);
    const auto roots = f.roots(terms);
    const Complex i(0.0, 1.0);
    for (double t : roots) {
        if (f.symmetric) {
            product *= 1.0 + z * z / (t * t);
        } else {
            const Complex w = z / (i * t);
            product *= (1.0 - w) * std::exp(w);
        }
    }
    return product;
}

namespace detail {

inline double parse_double(std::string_view text, std::string_view context) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

/// "a=1,b=2" -> {a: 1, b: 2}
inline std::map<std::string, double> parse_assignments(std::string_view text, std::string_view context) {
    std::map<std::string, double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "expected name=value in " + std::string(context));
        }
        out[std::string(item.substr(0, eq))] = parse_double(item.substr(eq + 1), context);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace detail

/// Catalog lookup by CLI identifier, e.g. `cosh`, `cpr:r=1,theta=0`, `exp_minus:theta=3.14`.
inline EntireFunctionSpec function_from_id(std::string_view id) {
    const auto colon = id.find(':');
    const auto name = id.substr(0, colon);
    const auto args = colon == std::string_view::npos ? std::map<std::string, double>{}
                                                      : detail::parse_assignments(id.substr(colon + 1), id);
    const auto arg = [&](const char* key) {
        const auto it = args.find(key);
        if (it == args.end()) throw Error(ErrorCode::ParseError, std::string(id) + ": missing " + key);
        return it->second;
    };
    const auto no_args = [&] {
        if (!args.empty()) throw Error(ErrorCode::ParseError, std::string(id) + ": takes no parameters");
    };
    if (name == "sinh_over_z") return no_args(), sinh_over_z();
    if (name == "cosh") return no_args(), cosh_function();
    if (name == "z_cosh_minus_sinh") return no_args(), z_cosh_minus_sinh();
    if (name == "gamma_reciprocal") return no_args(), gamma_reciprocal();
    if (name == "cpr") {
        if (args.size() != 2) throw Error(ErrorCode::ParseError, std::string(id) + ": expects r and theta");
        return cpr_function(arg("r"), arg("theta"));
    }
    if (name == "exp_minus") {
        if (args.size() != 1) throw Error(ErrorCode::ParseError, std::string(id) + ": expects theta");
        return exp_minus(arg("theta"));
    }
    throw Error(ErrorCode::UnknownFunction, "no catalog function '" + std::string(id) + "'");
}

/// First `count` roots of a catalog function (positive list for symmetric entries).
inline std::vector<double> catalog_roots(std::string_view id, std::size_t count) {
    return function_from_id(id).roots(count);
}

} // namespace opineq
