#pragma once

#include "opineq/linalg.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace opineq {

struct Schatten {
    double p; // >= 1, or +infinity for the operator norm
    friend bool operator==(const Schatten&, const Schatten&) = default;
};

struct KyFan {
    std::size_t k; // >= 1
    friend bool operator==(const KyFan&, const KyFan&) = default;
};

/// Selector for a unitarily invariant norm.
class NormSpec {
public:
    static NormSpec schatten(double p) {
        if (!(p >= 1.0)) throw Error(ErrorCode::InvalidParameter, "Schatten exponent must be >= 1");
        return NormSpec(Schatten{p});
    }
    static NormSpec operator_norm() { return NormSpec(Schatten{std::numeric_limits<double>::infinity()}); }
    static NormSpec ky_fan(std::size_t k) {
        if (k < 1) throw Error(ErrorCode::InvalidParameter, "Ky Fan index must be >= 1");
        return NormSpec(KyFan{k});
    }

    /// Parses `s1`, `s1.5`, `sinf`, `kf2`, ...
    static NormSpec parse(std::string_view text) {
        auto number = [&](std::string_view digits) -> double {
            double value = 0.0;
            const auto* end = digits.data() + digits.size();
            auto [ptr, ec] = std::from_chars(digits.data(), end, value);
            if (ec != std::errc() || ptr != end || digits.empty()) {
                throw Error(ErrorCode::ParseError, "bad norm spec '" + std::string(text) + "'");
            }
            return value;
        };
        if (text == "sinf") return operator_norm();
        if (text.starts_with("kf")) {
            const double k = number(text.substr(2));
            if (k != std::floor(k) || k < 1.0) {
                throw Error(ErrorCode::InvalidParameter, "Ky Fan index must be a positive integer");
            }
            return ky_fan(static_cast<std::size_t>(k));
        }
        if (text.starts_with("s")) return schatten(number(text.substr(1)));
        throw Error(ErrorCode::ParseError, "bad norm spec '" + std::string(text) + "'");
    }

    std::string to_string() const {
        if (const auto* s = std::get_if<Schatten>(&kind_)) {
            if (std::isinf(s->p)) return "sinf";
            char buf[32];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), s->p);
            return "s" + std::string(buf, ptr);
        }
        return "kf" + std::to_string(std::get<KyFan>(kind_).k);
    }

    const std::variant<Schatten, KyFan>& kind() const noexcept { return kind_; }
    bool is_operator_norm() const {
        const auto* s = std::get_if<Schatten>(&kind_);
        return s != nullptr && std::isinf(s->p);
    }

    friend bool operator==(const NormSpec&, const NormSpec&) = default;

private:
    explicit NormSpec(std::variant<Schatten, KyFan> kind) : kind_(kind) {}
    std::variant<Schatten, KyFan> kind_;
};

/// The campaign sweep: Schatten 1, 1.5, 2, 3, ∞ and Ky Fan 2.
inline std::vector<NormSpec> default_norm_sweep() {
    return {NormSpec::schatten(1.0), NormSpec::schatten(1.5), NormSpec::schatten(2.0),
            NormSpec::schatten(3.0), NormSpec::operator_norm(), NormSpec::ky_fan(2)};
}

/// Evaluates a norm from precomputed descending singular values.
inline double norm_from_singular_values(std::span<const double> sv, const NormSpec& spec) {
    if (const auto* kf = std::get_if<KyFan>(&spec.kind())) {
        if (kf->k > sv.size()) {
            throw Error(ErrorCode::InvalidParameter, "Ky Fan index exceeds min(rows, cols)");
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < kf->k; ++i) sum += sv[i];
        return sum;
    }
    const double p = std::get<Schatten>(spec.kind()).p;
    const double top = sv.front();
    if (std::isinf(p) || top == 0.0) return top;
    if (p == 1.0) {
        double sum = 0.0;
        for (double s : sv) sum += s;
        return sum;
    }
    double sum = 0.0;
    for (double s : sv) sum += std::pow(s / top, p);
    return top * std::pow(sum, 1.0 / p);
}

inline double norm(const ComplexMatrix& a, const NormSpec& spec) {
    return norm_from_singular_values(singular_values(a), spec);
}

} // namespace opineq
