#pragma once

// Registry of executable norm inequalities.
//
// Conventions shared by all cases: X, Y Hermitian; A, B positive definite; S = e^X;
// T is the ideal element. Each case states which of R = e^{Y} or R = e^{-Y} it uses.
// lhs/rhs are the two displayed sides; the relation says which way they compare.

#include "opineq/calculus.hpp"
#include "opineq/functions.hpp"
#include "opineq/gamma.hpp"
#include "opineq/norms.hpp"
#include "opineq/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opineq {

using Params = std::map<std::string, double>;

enum class Relation { GreaterEqual, LessEqual };

inline std::string_view to_string(Relation r) { return r == Relation::GreaterEqual ? ">=" : "<="; }

/// A scalar parameter: `lo..hi` is where the inequality is claimed, `hard_lo..hard_hi`
/// where the case can still be evaluated (used by counterexample search).
struct ParamRange {
    std::string name;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;
    double hard_lo = -std::numeric_limits<double>::infinity();
    double hard_hi = std::numeric_limits<double>::infinity();
    bool integer = false;
    std::optional<double> fallback;

    bool claims(double v) const {
        return (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
    }
    bool admits(double v) const { return v >= hard_lo && v <= hard_hi; }
};

struct Signature {
    std::size_t hermitian = 0;
    std::size_t positive = 0;
    std::size_t invertible = 0;
    std::size_t general = 0;
    std::size_t ideal = 0;
    std::vector<ParamRange> params;
};

struct CaseInputs {
    std::vector<ComplexMatrix> hermitian;
    std::vector<ComplexMatrix> positive;
    std::vector<ComplexMatrix> invertible;
    std::vector<ComplexMatrix> general;
    std::vector<ComplexMatrix> ideal;
    Params params;

    friend bool operator==(const CaseInputs&, const CaseInputs&) = default;
};

struct Sides {
    double lhs;
    double rhs;
};

struct Margin {
    double lhs = 0.0;
    double rhs = 0.0;
    double signed_margin = 0.0; // lhs - rhs for >=, rhs - lhs for <=
    double scale = 1.0;         // max(lhs, rhs, 1)

    double relative() const { return signed_margin / scale; }
    bool violates(double tolerance) const { return signed_margin < -tolerance * scale; }
};

inline Margin make_margin(Relation relation, Sides s) {
    Margin m;
    m.lhs = s.lhs;
    m.rhs = s.rhs;
    m.signed_margin = relation == Relation::GreaterEqual ? s.lhs - s.rhs : s.rhs - s.lhs;
    m.scale = std::max({s.lhs, s.rhs, 1.0});
    if (!std::isfinite(m.signed_margin)) throw Error(ErrorCode::DomainError, "margin is not finite");
    return m;
}

/// Claim: parameters must lie where the inequality is asserted. Hard: only where it is defined.
enum class ParamCheck { Claim, Hard };

using Evaluator = std::function<Sides(const CaseInputs&, const NormSpec&)>;

struct InequalityCase {
    std::string id;
    std::string description;
    std::string reference;
    Signature signature;
    Relation relation = Relation::GreaterEqual;
    Evaluator evaluate;
    std::function<void(const Params&)> constraint; // extra claim-level checks across parameters
    std::vector<Params> default_grid;              // sample i uses default_grid[i % size]
    std::function<CaseInputs(std::size_t dim)> equality_witness;
    std::vector<NormSpec> norms;  // empty: every norm
    bool expected_false = false;  // printed forms that do not hold; excluded from `all`
    bool singular_general = false;
};

namespace detail {

inline ComplexMatrix expm(const ComplexMatrix& x, double t = 1.0) { return expm_hermitian(x, t); }

inline ComplexMatrix commutator_form(const ComplexMatrix& x, const ComplexMatrix& t, const ComplexMatrix& y,
                                     double sign) {
    return x * t + sign * (t * y);
}

/// (L_X + R_Y)^n T
inline ComplexMatrix sylvester_power(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& t, int n) {
    ComplexMatrix p = t;
    for (int k = 0; k < n; ++k) p = x * p + p * y;
    return p;
}

inline void fail_param(const std::string& msg) { throw Error(ErrorCode::InvalidParameter, msg); }

inline bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

inline void require_cpr_axis(const Params& p) {
    const double r = p.at("r");
    const double theta = p.at("theta");
    if (!cpr_roots_imaginary(r, theta)) {
        fail_param("(r, theta) must satisfy theta = 0 or r = 0 for purely imaginary roots");
    }
}

inline void require_cpr_regular(const Params& p) {
    require_cpr_axis(p);
    if (cpr_sinh_point(p.at("r"), p.at("theta")) || cpr_cosh_point(p.at("r"), p.at("theta"))) {
        fail_param("(r, theta) is an exception point where F(0) = 0");
    }
}

inline ParamRange theta_range() {
    ParamRange p;
    p.name = "theta";
    p.lo = 0.0;
    p.hi = 2.0 * std::numbers::pi;
    p.hi_open = true;
    return p;
}

inline ParamRange cpr_r_range() {
    ParamRange p;
    p.name = "r";
    p.lo = -2.0;
    p.hi = 2.0;
    p.hard_lo = -2.0;
    p.hard_hi = 2.0;
    return p;
}

inline ParamRange unit_range(std::string name, double hard_lo = 0.0, double hard_hi = 1.0) {
    ParamRange p;
    p.name = std::move(name);
    p.lo = 0.0;
    p.hi = 1.0;
    p.hard_lo = hard_lo;
    p.hard_hi = hard_hi;
    return p;
}

inline std::vector<Params> cpr_axis_grid(bool include_exceptions) {
    std::vector<Params> grid;
    for (double r : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        if (include_exceptions || !cpr_cosh_point(r, 0.0)) grid.push_back({{"r", r}, {"theta", 0.0}});
    }
    for (int k = 1; k < 8; ++k) {
        const double theta = k * std::numbers::pi / 4.0;
        if (include_exceptions || !cpr_sinh_point(0.0, theta)) grid.push_back({{"r", 0.0}, {"theta", theta}});
    }
    return grid;
}

inline std::vector<Params> grid_1d(const std::string& name, std::initializer_list<double> values) {
    std::vector<Params> grid;
    for (double v : values) grid.push_back({{name, v}});
    return grid;
}

inline constexpr std::uint64_t kWitnessSeed = 0x5EED0001ULL;

/// Zero Hermitian inputs, identity positive/invertible/general inputs, fixed Gaussian ideal elements.
inline CaseInputs neutral_inputs(const Signature& sig, std::size_t dim, Params params) {
    CaseInputs in;
    for (std::size_t k = 0; k < sig.hermitian; ++k) in.hermitian.push_back(ComplexMatrix::zeros(dim, dim));
    for (std::size_t k = 0; k < sig.positive; ++k) in.positive.push_back(ComplexMatrix::identity(dim));
    for (std::size_t k = 0; k < sig.invertible; ++k) in.invertible.push_back(ComplexMatrix::identity(dim));
    for (std::size_t k = 0; k < sig.general; ++k) in.general.push_back(ComplexMatrix::identity(dim));
    for (std::size_t k = 0; k < sig.ideal; ++k) in.ideal.push_back(gaussian_matrix(dim, dim, kWitnessSeed + k));
    in.params = std::move(params);
    return in;
}

/// fn codes for ratio_scaling: 0 sinh_over_z, 1 cosh, 2 cpr(r, θ), 3 exp_minus(θ), 4 gamma_reciprocal.
inline EntireFunctionSpec scaling_function(const Params& p) {
    switch (static_cast<int>(p.at("fn"))) {
    case 0: return sinh_over_z();
    case 1: return cosh_function();
    case 2: return cpr_function(p.at("r"), p.at("theta"));
    case 3: return exp_minus(p.at("theta"));
    case 4: return gamma_reciprocal();
    default: throw Error(ErrorCode::InvalidParameter, "fn must be one of 0..4");
    }
}

/// Interlaced positive root lists w_1 < z_1 < w_2 < z_2 < ... drawn from `seed`.
inline std::pair<std::vector<double>, std::vector<double>> interlaced_roots(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> z(count), w(count);
    double cursor = 0.3 + rng.uniform();
    for (std::size_t k = 0; k < count; ++k) {
        w[k] = cursor;
        cursor += 0.2 + 1.5 * rng.uniform();
        z[k] = cursor;
        cursor += 0.2 + 1.5 * rng.uniform();
    }
    return {z, w};
}

inline double even_product(const std::vector<double>& roots, double x) {
    double p = 1.0;
    for (double t : roots) p *= 1.0 + (x * x) / (t * t);
    return p;
}

inline std::vector<InequalityCase> build_registry() {
    using std::numbers::pi;
    const Complex i(0.0, 1.0);
    std::vector<InequalityCase> cases;

    const auto add = [&](InequalityCase c) -> InequalityCase& {
        cases.push_back(std::move(c));
        return cases.back();
    };
    // Attaches the neutral witness (zero X, identity A) for the given parameter point.
    const auto neutral_witness = [](InequalityCase& c, Params params) {
        c.equality_witness = [sig = c.signature, params](std::size_t dim) { return neutral_inputs(sig, dim, params); };
    };
    const Signature xy_t{2, 0, 0, 0, 1, {}};
    const Signature x_t{1, 0, 0, 0, 1, {}};

    // ---- Corach–Porta–Recht family -------------------------------------------------------

    {
        InequalityCase c;
        c.id = "cpr_general";
        c.description = "||e^{it} r T + e^{it} S T R^-1 + S^-1 T R|| >= |lambda| ||S^b (A^n T) R^-b||, S=e^X, R=e^-Y, "
                        "A = L_X + R_Y, (n, lambda, b) the Weierstrass data of e^{it}(r+e^z)+e^-z";
        c.reference = "generalized Corach-Porta-Recht inequality";
        c.signature = xy_t;
        c.signature.params = {cpr_r_range(), theta_range()};
        c.relation = Relation::GreaterEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double r = in.params.at("r");
            const double theta = in.params.at("theta");
            const auto f = cpr_function(r, theta);
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const Complex phase = std::polar(1.0, theta);
            const ComplexMatrix psi = (phase * r) * t + phase * (expm(x) * t * expm(y)) + expm(x, -1.0) * t * expm(y, -1.0);
            const double b = f.exponent.real();
            const ComplexMatrix core = sylvester_power(x, y, t, f.zero_order);
            return Sides{norm(psi, spec), std::abs(f.leading) * norm(expm(x, b) * core * expm(y, b), spec)};
        };
        c.constraint = require_cpr_axis;
        c.default_grid = cpr_axis_grid(true);
        neutral_witness(add(std::move(c)), {{"r", 1.0}, {"theta", 0.0}});
    }
    {
        InequalityCase c;
        c.id = "cpr_sinh_exception";
        c.description = "||S T R^-1 - S^-1 T R|| >= 2 ||XT - TY||, S=e^X, R=e^Y";
        c.reference = "Corach-Porta-Recht inequality, sinh exception";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) - expm(x, -1.0) * t * expm(y);
            return Sides{norm(lhs, spec), 2.0 * norm(commutator_form(x, t, y, -1.0), spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "cpr_sinh_exception_printed";
        c.description = "||S T R^-1 - S^-1 T R|| >= 2 ||XT - TY|| with S=e^X, R=e^-Y (false as printed)";
        c.reference = "Corach-Porta-Recht inequality, sinh exception, literal sign convention";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y) - expm(x, -1.0) * t * expm(y, -1.0);
            return Sides{norm(lhs, spec), 2.0 * norm(commutator_form(x, t, y, -1.0), spec)};
        };
        c.expected_false = true;
        add(std::move(c));
    }
    {
        InequalityCase c;
        c.id = "cpr_cosh_exception";
        c.description = "||S T R^-1 + S^-1 T R - 2T|| >= ||X^2 T - 2XTY + T Y^2||, S=e^X, R=e^Y";
        c.reference = "Corach-Porta-Recht inequality, double-zero exception";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) + expm(x, -1.0) * t * expm(y) - 2.0 * t;
            const ComplexMatrix rhs = x * x * t - 2.0 * (x * t * y) + t * y * y;
            return Sides{norm(lhs, spec), norm(rhs, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "cpr_cosh_exception_printed";
        c.description = "||S T R^-1 + S^-1 T R - 2T|| >= 2 ||XT - TY||, S=e^X, R=e^Y (false as printed)";
        c.reference = "Corach-Porta-Recht inequality, double-zero exception, literal bound";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) + expm(x, -1.0) * t * expm(y) - 2.0 * t;
            return Sides{norm(lhs, spec), 2.0 * norm(commutator_form(x, t, y, -1.0), spec)};
        };
        c.expected_false = true;
        add(std::move(c));
    }
    {
        InequalityCase c;
        c.id = "cpr_invertible";
        c.description = "||e^{it} S T R^-1 + (S*)^-1 T R*|| >= sqrt(2(1+cos t)) ||T||, S, R invertible";
        c.reference = "Corach-Porta-Recht inequality for invertible operators";
        c.signature = {0, 0, 2, 0, 1, {theta_range()}};
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double theta = in.params.at("theta");
            const auto& s = in.invertible[0];
            const auto& r = in.invertible[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = std::polar(1.0, theta) * (s * t * inverse(r)) + inverse(s.adjoint()) * t * r.adjoint();
            return Sides{norm(lhs, spec), std::sqrt(2.0 * (1.0 + std::cos(theta))) * norm(t, spec)};
        };
        c.default_grid = grid_1d("theta", {0.0, pi / 4, pi / 2, 3 * pi / 4, pi, 5 * pi / 4, 3 * pi / 2, 7 * pi / 4});
        neutral_witness(add(std::move(c)), {{"theta", pi / 2}});
    }
    {
        InequalityCase c;
        c.id = "agm";
        c.description = "||A A* T + T B B*|| >= 2 ||A* T B|| for arbitrary A, B";
        c.reference = "arithmetic-geometric mean inequality (Bhatia-Davis)";
        c.signature = {0, 0, 0, 2, 1, {}};
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& a = in.general[0];
            const auto& b = in.general[1];
            const auto& t = in.ideal[0];
            return Sides{norm(a * a.adjoint() * t + t * b * b.adjoint(), spec), 2.0 * norm(a.adjoint() * t * b, spec)};
        };
        c.singular_general = true;
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "zhan";
        c.description = "||r T + S T R^-1 + S^-1 T R|| >= |r+2| ||T||, S=e^X, R=e^Y, r in (-2, 2]";
        c.reference = "Zhan's inequality";
        ParamRange r;
        r.name = "r";
        r.lo = -2.0;
        r.lo_open = true;
        r.hi = 2.0;
        c.signature = xy_t;
        c.signature.params = {r};
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double rr = in.params.at("r");
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = rr * t + expm(x) * t * expm(y, -1.0) + expm(x, -1.0) * t * expm(y);
            return Sides{norm(lhs, spec), std::abs(rr + 2.0) * norm(t, spec)};
        };
        c.default_grid = grid_1d("r", {-1.9, -1.0, 0.0, 1.0, 2.0});
        neutral_witness(add(std::move(c)), {{"r", 0.0}});
    }

    // ---- e^z - e^{iθ} ----------------------------------------------------------------------

    {
        InequalityCase c;
        c.id = "exp_minus_id";
        c.description = "||S T R^-1 - T|| >= ||S^1/2 (XT - TY) R^-1/2||, S=e^X, R=e^Y";
        c.reference = "exponential difference bound, theta = 0";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) - t;
            const ComplexMatrix rhs = expm(x, 0.5) * commutator_form(x, t, y, -1.0) * expm(y, -0.5);
            return Sides{norm(lhs, spec), norm(rhs, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "exp_minus_theta";
        c.description = "||S T R^-1 - e^{it} T|| >= sqrt(2(1-cos t)) ||S^1/2 T R^-1/2||, S=e^X, R=e^Y, t != 0";
        c.reference = "exponential difference bound, theta != 0";
        ParamRange theta = theta_range();
        theta.lo_open = true;
        c.signature = xy_t;
        c.signature.params = {theta};
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double th = in.params.at("theta");
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) - std::polar(1.0, th) * t;
            const ComplexMatrix rhs = expm(x, 0.5) * t * expm(y, -0.5);
            return Sides{norm(lhs, spec), std::sqrt(2.0 * (1.0 - std::cos(th))) * norm(rhs, spec)};
        };
        c.default_grid = grid_1d("theta", {pi / 4, pi / 2, 3 * pi / 4, pi, 5 * pi / 4, 3 * pi / 2, 7 * pi / 4});
        neutral_witness(add(std::move(c)), {{"theta", pi / 2}});
    }
    {
        InequalityCase c;
        c.id = "exp_minus_pi";
        c.description = "||S T R^-1 + T|| >= 2 ||S^1/2 T R^-1/2||, S=e^X, R=e^Y";
        c.reference = "exponential difference bound, theta = pi";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) + t;
            return Sides{norm(lhs, spec), 2.0 * norm(expm(x, 0.5) * t * expm(y, -0.5), spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "exp_minus_pi_printed";
        c.description = "||S T R^-1 + T|| >= 2 ||T||, S=e^X, R=e^Y (false as printed)";
        c.reference = "exponential difference bound, theta = pi, literal form";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            return Sides{norm(expm(x) * t * expm(y, -1.0) + t, spec), 2.0 * norm(t, spec)};
        };
        c.expected_false = true;
        add(std::move(c));
    }

    // ---- sinh / sin ------------------------------------------------------------------------

    {
        InequalityCase c;
        c.id = "sinh_lower";
        c.description = "||sinh(X) T cosh(Y) - cosh(X) T sinh(Y)|| >= ||XT - TY||";
        c.reference = "sinh lower bound";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const auto sh = [](double v) { return std::sinh(v); };
            const auto ch = [](double v) { return std::cosh(v); };
            const ComplexMatrix lhs = matrix_function_hermitian(sh, x) * t * matrix_function_hermitian(ch, y) -
                                      matrix_function_hermitian(ch, x) * t * matrix_function_hermitian(sh, y);
            return Sides{norm(lhs, spec), norm(commutator_form(x, t, y, -1.0), spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "sinh_lower_left";
        c.description = "||sinh(X) T|| >= ||X T||";
        c.reference = "sinh lower bound, one-sided";
        c.signature = x_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& t = in.ideal[0];
            const auto sh = matrix_function_hermitian([](double v) { return std::sinh(v); }, x);
            return Sides{norm(sh * t, spec), norm(x * t, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "sin_upper";
        c.description = "||sin(H) T cos(K) - cos(H) T sin(K)|| <= ||HT - TK||, H, K Hermitian";
        c.reference = "sine upper bound (Kosaki)";
        c.signature = xy_t;
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& h = in.hermitian[0];
            const auto& k = in.hermitian[1];
            const auto& t = in.ideal[0];
            const auto sn = [](double v) { return std::sin(v); };
            const auto cs = [](double v) { return std::cos(v); };
            const ComplexMatrix lhs = matrix_function_hermitian(sn, h) * t * matrix_function_hermitian(cs, k) -
                                      matrix_function_hermitian(cs, h) * t * matrix_function_hermitian(sn, k);
            return Sides{norm(lhs, spec), norm(commutator_form(h, t, k, -1.0), spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "sin_upper_left";
        c.description = "||sin(H) T|| <= ||H T||, H Hermitian";
        c.reference = "sine upper bound, one-sided";
        c.signature = x_t;
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& h = in.hermitian[0];
            const auto& t = in.ideal[0];
            const auto sn = matrix_function_hermitian([](double v) { return std::sin(v); }, h);
            return Sides{norm(sn * t, spec), norm(h * t, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "sin_upper_skew";
        c.description = "||sin(H) T cos(K) - cos(H) T sin(K)|| <= ||HT - TK|| for H = iX, K = iY (false)";
        c.reference = "sine upper bound read with skew-adjoint arguments";
        c.signature = xy_t;
        c.relation = Relation::LessEqual;
        c.evaluate = [i](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            // sin(iX) = i sinh(X), cos(iX) = cosh(X)
            const auto sn = [i](double v) { return i * std::sinh(v); };
            const auto cs = [](double v) { return std::cosh(v); };
            const ComplexMatrix lhs = matrix_function_hermitian(sn, x) * t * matrix_function_hermitian(cs, y) -
                                      matrix_function_hermitian(cs, x) * t * matrix_function_hermitian(sn, y);
            return Sides{norm(lhs, spec), norm(i * commutator_form(x, t, y, -1.0), spec)};
        };
        c.expected_false = true;
        add(std::move(c));
    }

    // ---- contraction families on A = L_X + R_Y ---------------------------------------------

    const auto ratio_case = [&](std::string id, std::string description, std::vector<ParamRange> params,
                                std::function<double(const Params&, double)> kernel,
                                std::function<void(const Params&)> constraint, std::vector<Params> grid) {
        InequalityCase c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.reference = "contraction of hyperbolic ratio kernels";
        c.signature = xy_t;
        c.signature.params = std::move(params);
        c.relation = Relation::LessEqual;
        c.evaluate = [kernel](const CaseInputs& in, const NormSpec& spec) {
            const TwoSidedOperator op(in.hermitian[0], in.hermitian[1], Sign::Plus);
            const auto& t = in.ideal[0];
            const auto f = [&](double x) { return kernel(in.params, x); };
            return Sides{norm(apply_calculus(f, op, t), spec), norm(t, spec)};
        };
        c.constraint = std::move(constraint);
        const Params first = grid.front();
        c.default_grid = std::move(grid);
        neutral_witness(add(std::move(c)), first);
    };
    {
        ParamRange r = unit_range("r", 0.0, 10.0);
        r.hi = std::numeric_limits<double>::infinity();
        ratio_case("ratio_sinh", "||sinh(sA)/(s sinh A) T|| <= ||T||, s in [0,1], A = L_X + R_Y",
                   {unit_range("s")}, [](const Params& p, double x) { return kernels::sinh_ratio(p.at("s"), x); },
                   {}, grid_1d("s", {0.0, 0.25, 0.5, 0.75, 1.0}));
        ratio_case("ratio_cosh", "||cosh(sA)/cosh(A) T|| <= ||T||, s in [0,1], A = L_X + R_Y", {unit_range("s")},
                   [](const Params& p, double x) { return kernels::cosh_ratio(p.at("s"), x); }, {},
                   grid_1d("s", {0.0, 0.25, 0.5, 0.75, 1.0}));
        ratio_case(
            "ratio_sinh_cosh", "||sinh(sA)/(sA cosh(rA)) T|| <= ||T||, 0 <= s <= r, s <= 1", {unit_range("s"), r},
            [](const Params& p, double x) { return kernels::sinh_cosh_ratio(p.at("s"), p.at("r"), x); },
            [](const Params& p) {
                if (!(p.at("s") <= p.at("r"))) fail_param("ratio_sinh_cosh needs s <= r");
            },
            {{{"s", 0.0}, {"r", 0.5}},
             {{"s", 0.25}, {"r", 0.5}},
             {{"s", 0.5}, {"r", 0.5}},
             {{"s", 0.75}, {"r", 1.0}},
             {{"s", 1.0}, {"r", 1.0}}});
        ratio_case(
            "ratio_reverse", "||sA cosh(rA)/sinh(sA) T|| <= ||T||, 0 <= 2r <= s <= 1", {unit_range("s"), r},
            [](const Params& p, double x) { return kernels::reverse_ratio(p.at("s"), p.at("r"), x); },
            [](const Params& p) {
                if (!(2.0 * p.at("r") <= p.at("s"))) fail_param("ratio_reverse needs 2r <= s");
            },
            {{{"s", 0.0}, {"r", 0.0}},
             {{"s", 0.5}, {"r", 0.0}},
             {{"s", 0.5}, {"r", 0.25}},
             {{"s", 1.0}, {"r", 0.25}},
             {{"s", 1.0}, {"r", 0.5}}});
    }

    // ---- means of positive operators -------------------------------------------------------

    const Signature ab_t{0, 2, 0, 0, 1, {}};
    {
        InequalityCase c;
        c.id = "heinz_sum";
        c.description = "||A^{1-t} T B^t + A^t T B^{1-t}|| <= ||AT + TB||, t in [0,1]";
        c.reference = "Heinz inequality";
        c.signature = ab_t;
        c.signature.params = {unit_range("t")};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double t = in.params.at("t");
            const auto& a = in.positive[0];
            const auto& b = in.positive[1];
            const auto& x = in.ideal[0];
            const ComplexMatrix lhs =
                powm_positive(a, 1.0 - t) * x * powm_positive(b, t) + powm_positive(a, t) * x * powm_positive(b, 1.0 - t);
            return Sides{norm(lhs, spec), norm(a * x + x * b, spec)};
        };
        c.default_grid = grid_1d("t", {0.0, 0.25, 0.5, 0.75, 1.0});
        neutral_witness(add(std::move(c)), {{"t", 0.5}});
    }
    {
        InequalityCase c;
        c.id = "heinz_diff";
        c.description = "||A^{1-t} T B^t - A^t T B^{1-t}|| <= |2t-1| ||AT - TB||, t in [0,1]";
        c.reference = "Heinz inequality, difference form";
        c.signature = ab_t;
        c.signature.params = {unit_range("t")};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double t = in.params.at("t");
            const auto& a = in.positive[0];
            const auto& b = in.positive[1];
            const auto& x = in.ideal[0];
            const ComplexMatrix lhs =
                powm_positive(a, 1.0 - t) * x * powm_positive(b, t) - powm_positive(a, t) * x * powm_positive(b, 1.0 - t);
            return Sides{norm(lhs, spec), std::abs(2.0 * t - 1.0) * norm(a * x - x * b, spec)};
        };
        c.default_grid = grid_1d("t", {0.0, 0.25, 0.5, 0.75, 1.0});
        c.equality_witness = [sig = c.signature](std::size_t dim) {
            CaseInputs in = neutral_inputs(sig, dim, {{"t", 0.0}});
            in.positive[0] = random_positive(dim, kWitnessSeed + 11, 1.0);
            in.positive[1] = random_positive(dim, kWitnessSeed + 12, 1.0);
            return in;
        };
        add(std::move(c));
    }
    {
        InequalityCase c;
        c.id = "means_chain";
        c.description = "||A^1/2 T B^1/2|| <= 1/2||A^t T B^{1-t} + A^{1-t} T B^t|| <= ||int_0^1 A^{1-s} T B^s ds|| "
                        "<= 1/2||AT + TB||; `link` selects inequality 1, 2 or 3";
        c.reference = "geometric-Heinz-logarithmic-arithmetic mean chain";
        ParamRange t;
        t.name = "t";
        t.lo = 0.25;
        t.hi = 0.75;
        t.hard_lo = 0.0;
        t.hard_hi = 1.0;
        ParamRange link;
        link.name = "link";
        link.lo = link.hard_lo = 1.0;
        link.hi = link.hard_hi = 3.0;
        link.integer = true;
        c.signature = ab_t;
        c.signature.params = {t, link};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double tt = in.params.at("t");
            const int which = static_cast<int>(in.params.at("link"));
            const auto& a = in.positive[0];
            const auto& b = in.positive[1];
            const auto& x = in.ideal[0];
            const auto geometric = [&] { return norm(powm_positive(a, 0.5) * x * powm_positive(b, 0.5), spec); };
            const auto heinz = [&] {
                const ComplexMatrix h = powm_positive(a, tt) * x * powm_positive(b, 1.0 - tt) +
                                        powm_positive(a, 1.0 - tt) * x * powm_positive(b, tt);
                return 0.5 * norm(h, spec);
            };
            const auto logarithmic = [&] { return norm(integral_mean(logm_positive(a), logm_positive(b), x), spec); };
            const auto arithmetic = [&] { return 0.5 * norm(a * x + x * b, spec); };
            switch (which) {
            case 1: return Sides{geometric(), heinz()};
            case 2: return Sides{heinz(), logarithmic()};
            default: return Sides{logarithmic(), arithmetic()};
            }
        };
        for (double tt : {0.25, 0.4, 0.5, 0.6, 0.75})
            for (double l : {1.0, 2.0, 3.0}) c.default_grid.push_back({{"t", tt}, {"link", l}});
        neutral_witness(add(std::move(c)), {{"t", 0.5}, {"link", 2.0}});
    }

    // ---- exponential map -------------------------------------------------------------------

    {
        InequalityCase c;
        c.id = "emi";
        c.description = "||e^{-X/2} dexp_X(Y) e^{-X/2}|| >= ||Y||";
        c.reference = "exponential metric increasing property";
        c.signature = x_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.ideal[0];
            const ComplexMatrix half = expm(x, -0.5);
            return Sides{norm(half * dexp(x, y) * half, spec), norm(y, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "tan_roots";
        c.description = "||S T R^-1 + S^-1 T R - 2 int_0^1 S^{2t-1} T R^{1-2t} dt|| >= 2/3 ||X^2 T + T Y^2 - 2XTY||, "
                        "S=e^X, R=e^Y";
        c.reference = "z cosh z - sinh z product bound";
        c.signature = xy_t;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto& t = in.ideal[0];
            const TwoSidedOperator d(x, y, Sign::Minus);
            const ComplexMatrix integral = apply_calculus([](double v) { return kernels::sinhc(v); }, d, t);
            const ComplexMatrix lhs = expm(x) * t * expm(y, -1.0) + expm(x, -1.0) * t * expm(y) - 2.0 * integral;
            const ComplexMatrix rhs = x * x * t + t * y * y - 2.0 * (x * t * y);
            return Sides{norm(lhs, spec), (2.0 / 3.0) * norm(rhs, spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }
    {
        InequalityCase c;
        c.id = "gamma_contraction";
        c.description = "||Gamma(1 + iX) T|| <= ||T||";
        c.reference = "Gamma function contraction on the imaginary axis";
        c.signature = x_t;
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto g = matrix_function_hermitian([](double v) { return complex_gamma(Complex(1.0, v)); },
                                                     in.hermitian[0]);
            return Sides{norm(g * in.ideal[0], spec), norm(in.ideal[0], spec)};
        };
        neutral_witness(add(std::move(c)), {});
    }

    // ---- Lipschitz bounds for the absolute value --------------------------------------------

    const auto abs_lipschitz = [&](std::string id, std::string description, bool exact_p2) {
        InequalityCase c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.reference = "Lipschitz estimate through tanh(L_X - R_Y)";
        c.signature = {0, 0, 2, 0, 1, {}};
        c.relation = Relation::LessEqual;
        c.evaluate = [exact_p2](const CaseInputs& in, const NormSpec& spec) {
            const auto& s = in.invertible[0];
            const auto& r = in.invertible[1];
            const auto& t = in.ideal[0];
            // Right polar decompositions S = U e^X, R = V e^Y.
            const ComplexMatrix x = 0.5 * logm_positive(s.adjoint() * s);
            const ComplexMatrix y = 0.5 * logm_positive(r.adjoint() * r);
            const ComplexMatrix first = s * t * inverse(r);
            const ComplexMatrix second = inverse(s.adjoint()) * t * r.adjoint();
            const double multiplier =
                exact_p2 ? induced_norm_p2([](double v) { return std::tanh(v); }, TwoSidedOperator(x, y, Sign::Minus))
                         : hermitian_eigendecompose(x).spectral_radius() + hermitian_eigendecompose(y).spectral_radius();
            return Sides{norm(first - second, spec), multiplier * norm(first + second, spec)};
        };
        if (exact_p2) c.norms = {NormSpec::schatten(2.0)};
        neutral_witness(add(std::move(c)), {});
    };
    abs_lipschitz("abs_lipschitz_p2",
                  "||S T R^-1 - (S*)^-1 T R*|| <= ||tanh(L_X - R_Y)|| ||S T R^-1 + (S*)^-1 T R*||, |S| = e^X, "
                  "|R| = e^Y, Hilbert-Schmidt norm",
                  true);
    abs_lipschitz("abs_lipschitz_bound",
                  "||S T R^-1 - (S*)^-1 T R*|| <= (||X|| + ||Y||) ||S T R^-1 + (S*)^-1 T R*||, |S| = e^X, |R| = e^Y",
                  false);

    {
        InequalityCase c;
        c.id = "lowner_heinz";
        c.description = "||log(e^{-tX/2} e^{tY} e^{-tX/2})|| <= t ||log(e^{-X/2} e^Y e^{-X/2})||, t in [0,1]";
        c.reference = "Loewner-Heinz (Cordes) inequality in log form";
        c.signature = {2, 0, 0, 0, 0, {unit_range("t")}};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const double t = in.params.at("t");
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const auto sandwich = [&](double s) {
                const ComplexMatrix h = expm(x, -0.5 * s);
                return logm_positive(h * expm(y, s) * h);
            };
            return Sides{norm(sandwich(t), spec), t * norm(sandwich(1.0), spec)};
        };
        c.default_grid = grid_1d("t", {0.0, 0.25, 0.5, 0.75, 1.0});
        c.equality_witness = [sig = c.signature](std::size_t dim) {
            CaseInputs in = neutral_inputs(sig, dim, {{"t", 1.0}});
            in.hermitian[0] = random_hermitian(dim, kWitnessSeed + 21, 1.0);
            in.hermitian[1] = random_hermitian(dim, kWitnessSeed + 22, 1.0);
            return in;
        };
        add(std::move(c));
    }

    // ---- Weierstrass engine ----------------------------------------------------------------

    {
        InequalityCase c;
        c.id = "invertibility_bound_p2";
        c.description = "||F(L_X + R_Y)^-1|| <= |lambda|^-1 ||e^{-bX}|| ||e^{-bY}|| on the Hilbert-Schmidt ideal, "
                        "F = e^{it}(r+e^z)+e^-z";
        c.reference = "invertibility of F(L_X + R_Y) for Weierstrass data";
        c.signature = {2, 0, 0, 0, 0, {cpr_r_range(), theta_range()}};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec&) {
            const auto f = cpr_function(in.params.at("r"), in.params.at("theta"));
            const auto& x = in.hermitian[0];
            const auto& y = in.hermitian[1];
            const double lhs =
                induced_norm_p2([&](double v) { return 1.0 / f.closed_form(v); }, TwoSidedOperator(x, y, Sign::Plus));
            const double b = f.exponent.real();
            const double ex = operator_norm(expm(x, -b));
            const double ey = operator_norm(expm(y, -b));
            return Sides{lhs, ex * ey / std::abs(f.leading)};
        };
        c.constraint = require_cpr_regular;
        c.default_grid = cpr_axis_grid(false);
        c.norms = {NormSpec::schatten(2.0)};
        neutral_witness(add(std::move(c)), {{"r", 1.0}, {"theta", 0.0}});
    }
    {
        InequalityCase c;
        c.id = "ratio_scaling";
        c.description = "||F(sA) F(A)^-1 T|| <= ||e^{alpha (s-1) A} T||, A = L_X + R_Y, s in (0,1), F from the "
                        "catalog (fn: 0 sinh_over_z, 1 cosh, 2 cpr(r,theta), 3 exp_minus(theta), 4 gamma_reciprocal)";
        c.reference = "scaling comparison for entire functions with imaginary zeros";
        ParamRange fn;
        fn.name = "fn";
        fn.lo = fn.hard_lo = 0.0;
        fn.hi = fn.hard_hi = 4.0;
        fn.integer = true;
        ParamRange s;
        s.name = "s";
        s.lo = 0.0;
        s.hi = 1.0;
        s.lo_open = s.hi_open = true;
        s.hard_lo = 0.0;
        s.hard_hi = 1.0;
        ParamRange r = cpr_r_range();
        r.fallback = 0.0;
        ParamRange theta = theta_range();
        theta.fallback = 0.0;
        c.signature = xy_t;
        c.signature.params = {fn, s, r, theta};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto f = scaling_function(in.params);
            const double sv = in.params.at("s");
            const TwoSidedOperator op(in.hermitian[0], in.hermitian[1], Sign::Plus);
            const auto& t = in.ideal[0];
            const auto ratio = [&](double x) { return f.closed_form(sv * x) / f.closed_form(x); };
            const auto expo = [&](double x) { return std::exp(f.exponent * ((sv - 1.0) * x)); };
            return Sides{norm(apply_calculus(ratio, op, t), spec), norm(apply_calculus(expo, op, t), spec)};
        };
        c.constraint = [](const Params& p) {
            const int code = static_cast<int>(p.at("fn"));
            if (code == 2) require_cpr_regular(p);
            if (code == 3 && std::abs(std::sin(0.5 * p.at("theta"))) < 1e-12) {
                fail_param("exp_minus needs theta != 0 so that F(0) != 0");
            }
        };
        for (double code : {0.0, 1.0, 4.0})
            for (double sv : {0.25, 0.5, 0.75})
                c.default_grid.push_back({{"fn", code}, {"s", sv}, {"r", 0.0}, {"theta", 0.0}});
        c.default_grid.push_back({{"fn", 2.0}, {"s", 0.5}, {"r", 1.0}, {"theta", 0.0}});
        c.default_grid.push_back({{"fn", 2.0}, {"s", 0.5}, {"r", -1.0}, {"theta", 0.0}});
        c.default_grid.push_back({{"fn", 2.0}, {"s", 0.5}, {"r", 0.0}, {"theta", pi / 2}});
        c.default_grid.push_back({{"fn", 3.0}, {"s", 0.5}, {"r", 0.0}, {"theta", pi / 2}});
        c.default_grid.push_back({{"fn", 3.0}, {"s", 0.25}, {"r", 0.0}, {"theta", pi}});
        neutral_witness(add(std::move(c)), {{"fn", 4.0}, {"s", 0.5}, {"r", 0.0}, {"theta", 0.0}});
    }
    {
        InequalityCase c;
        c.id = "interlaced_generic";
        c.description = "||F(A) T|| <= ||G(A) T||, F, G finite even products with interlaced roots w_k < z_k, "
                        "A = L_X + R_Y";
        c.reference = "comparison of products with interlaced imaginary zeros";
        ParamRange n;
        n.name = "N";
        n.lo = n.hard_lo = 1.0;
        n.hi = n.hard_hi = 32.0;
        n.integer = true;
        ParamRange seed;
        seed.name = "root_seed";
        seed.lo = seed.hard_lo = 0.0;
        seed.hi = seed.hard_hi = 9007199254740992.0;
        seed.integer = true;
        c.signature = xy_t;
        c.signature.params = {n, seed};
        c.relation = Relation::LessEqual;
        c.evaluate = [](const CaseInputs& in, const NormSpec& spec) {
            const auto [z, w] = interlaced_roots(static_cast<std::size_t>(in.params.at("N")),
                                                 static_cast<std::uint64_t>(in.params.at("root_seed")));
            const TwoSidedOperator op(in.hermitian[0], in.hermitian[1], Sign::Plus);
            const auto& t = in.ideal[0];
            const auto lhs = apply_calculus([&](double x) { return even_product(z, x); }, op, t);
            const auto rhs = apply_calculus([&](double x) { return even_product(w, x); }, op, t);
            return Sides{norm(lhs, spec), norm(rhs, spec)};
        };
        for (double nn : {1.0, 2.0, 4.0, 8.0})
            for (double sd : {1.0, 2.0}) c.default_grid.push_back({{"N", nn}, {"root_seed", sd}});
        neutral_witness(add(std::move(c)), {{"N", 4.0}, {"root_seed", 1.0}});
    }

    // ---- proof engine ----------------------------------------------------------------------

    {
        InequalityCase c;
        c.id = "factor_expansivity";
        c.description = "||g(A) T|| >= ||T||, g(z) = (1 - z/(i t)) e^{z/(i t)}, A = L_X + R_Y";
        c.reference = "expansivity of Weierstrass factors";
        ParamRange root;
        root.name = "root";
        c.signature = xy_t;
        c.signature.params = {root};
        c.evaluate = [i](const CaseInputs& in, const NormSpec& spec) {
            const double root_t = in.params.at("root");
            const TwoSidedOperator op(in.hermitian[0], in.hermitian[1], Sign::Plus);
            const auto& t = in.ideal[0];
            const auto g = [&](double x) {
                const Complex w = x / (i * root_t);
                return (1.0 - w) * std::exp(w);
            };
            return Sides{norm(apply_calculus(g, op, t), spec), norm(t, spec)};
        };
        c.constraint = [](const Params& p) {
            if (p.at("root") == 0.0) fail_param("root must be nonzero");
        };
        c.default_grid = grid_1d("root", {pi / 2, pi, 4.493409457909064, 1.0, 2.0, -2.5});
        neutral_witness(add(std::move(c)), {{"root", pi}});
    }
    {
        InequalityCase c;
        c.id = "resolvent_contraction";
        c.description = "||h(A) T|| <= ||T||, h(x) = [q + (1-q)(1 + ix/z)^-1]^-1, q > 1, A = L_X + R_Y";
        c.reference = "resolvent contraction";
        ParamRange q;
        q.name = "q";
        q.lo = 1.0;
        q.lo_open = true;
        q.hard_lo = 1e-12;
        ParamRange z;
        z.name = "z";
        c.signature = xy_t;
        c.signature.params = {q, z};
        c.relation = Relation::LessEqual;
        c.evaluate = [i](const CaseInputs& in, const NormSpec& spec) {
            const double qq = in.params.at("q");
            const double zz = in.params.at("z");
            const TwoSidedOperator op(in.hermitian[0], in.hermitian[1], Sign::Plus);
            const auto& t = in.ideal[0];
            const auto h = [&](double x) { return 1.0 / (qq + (1.0 - qq) / (1.0 + i * x / zz)); };
            return Sides{norm(apply_calculus(h, op, t), spec), norm(t, spec)};
        };
        c.constraint = [](const Params& p) {
            if (p.at("z") == 0.0) fail_param("z must be nonzero");
        };
        for (double qq : {1.5, 4.0})
            for (double zz : {1.0, -2.0, pi}) c.default_grid.push_back({{"q", qq}, {"z", zz}});
        neutral_witness(add(std::move(c)), {{"q", 2.0}, {"z", 1.0}});
    }
    {
        InequalityCase c;
        c.id = "dissipative_expansive";
        c.description = "||T + i s (XT + sign TY)|| >= ||T||, s real, sign = +-1";
        c.reference = "expansivity of 1 - sD for dissipative D";
        ParamRange s;
        s.name = "s";
        ParamRange sign;
        sign.name = "sign";
        sign.lo = sign.hard_lo = -1.0;
        sign.hi = sign.hard_hi = 1.0;
        sign.integer = true;
        c.signature = xy_t;
        c.signature.params = {s, sign};
        c.evaluate = [i](const CaseInputs& in, const NormSpec& spec) {
            const double sv = in.params.at("s");
            const auto& t = in.ideal[0];
            const ComplexMatrix d = commutator_form(in.hermitian[0], t, in.hermitian[1], in.params.at("sign"));
            return Sides{norm(t + (i * sv) * d, spec), norm(t, spec)};
        };
        c.constraint = [](const Params& p) {
            if (p.at("sign") == 0.0) fail_param("sign must be +1 or -1");
        };
        for (double sv : {-2.0, -0.5, 0.5, 2.0})
            for (double sg : {1.0, -1.0}) c.default_grid.push_back({{"s", sv}, {"sign", sg}});
        neutral_witness(add(std::move(c)), {{"s", 1.0}, {"sign", 1.0}});
    }

    for (auto& c : cases) {
        if (c.default_grid.empty()) c.default_grid.push_back({});
    }
    return cases;
}

} // namespace detail

inline const std::vector<InequalityCase>& registry() {
    static const std::vector<InequalityCase> cases = detail::build_registry();
    return cases;
}

inline const InequalityCase& find_case(std::string_view id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw Error(ErrorCode::UnknownCase, "no case '" + std::string(id) + "'");
}

/// Ids run by `verify --case all`: every case not flagged as a known-false printed form.
inline std::vector<std::string> verified_case_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry())
        if (!c.expected_false) ids.push_back(c.id);
    return ids;
}

/// Fills fallbacks and validates parameters against the case signature.
inline Params resolve_params(const InequalityCase& c, const Params& given, ParamCheck check) {
    Params out;
    for (const auto& [name, value] : given) {
        const bool known = std::any_of(c.signature.params.begin(), c.signature.params.end(),
                                       [&](const ParamRange& p) { return p.name == name; });
        if (!known) throw Error(ErrorCode::InvalidParameter, c.id + ": unknown parameter '" + name + "'");
    }
    for (const auto& p : c.signature.params) {
        const auto it = given.find(p.name);
        double v;
        if (it != given.end()) {
            v = it->second;
        } else if (p.fallback) {
            v = *p.fallback;
        } else {
            throw Error(ErrorCode::InvalidParameter, c.id + ": missing parameter '" + p.name + "'");
        }
        if (!std::isfinite(v) || (p.integer && !detail::is_integer(v)) || !p.admits(v)) {
            throw Error(ErrorCode::InvalidParameter, c.id + ": parameter '" + p.name + "' outside its domain");
        }
        if (check == ParamCheck::Claim && !p.claims(v)) {
            throw Error(ErrorCode::InvalidParameter, c.id + ": parameter '" + p.name + "' outside the claimed range");
        }
        out[p.name] = v;
    }
    if (check == ParamCheck::Claim && c.constraint) c.constraint(out);
    return out;
}

inline void check_signature(const InequalityCase& c, const CaseInputs& in) {
    const auto& s = c.signature;
    if (in.hermitian.size() != s.hermitian || in.positive.size() != s.positive ||
        in.invertible.size() != s.invertible || in.general.size() != s.general || in.ideal.size() != s.ideal) {
        throw Error(ErrorCode::SignatureMismatch, c.id + ": input counts do not match the signature");
    }
    std::size_t dim = 0;
    for (const auto* group : {&in.hermitian, &in.positive, &in.invertible, &in.general, &in.ideal}) {
        for (const auto& m : *group) {
            if (!m.is_square() || (dim != 0 && m.rows() != dim)) {
                throw Error(ErrorCode::SignatureMismatch, c.id + ": all inputs must be square of one dimension");
            }
            dim = m.rows();
        }
    }
    for (const auto& h : in.hermitian) hermitian_part_checked(h);
    for (const auto& a : in.positive) require_positive_definite(hermitian_eigendecompose(a));
}

inline Margin evaluate_case(const InequalityCase& c, const CaseInputs& inputs, const NormSpec& spec,
                            ParamCheck check = ParamCheck::Claim) {
    check_signature(c, inputs);
    if (check == ParamCheck::Claim && !c.norms.empty() &&
        std::find(c.norms.begin(), c.norms.end(), spec) == c.norms.end()) {
        throw Error(ErrorCode::InvalidParameter, c.id + " is only claimed for norm " + c.norms.front().to_string());
    }
    CaseInputs resolved = inputs;
    resolved.params = resolve_params(c, inputs.params, check);
    return make_margin(c.relation, c.evaluate(resolved, spec));
}

inline Margin evaluate_case(std::string_view id, const CaseInputs& inputs, const NormSpec& spec,
                            ParamCheck check = ParamCheck::Claim) {
    return evaluate_case(find_case(id), inputs, spec, check);
}

/// Margin at the case's canonical equality configuration.
inline Margin equality_audit(std::string_view id, const NormSpec& spec = NormSpec::schatten(2.0), std::size_t dim = 3) {
    const auto& c = find_case(id);
    if (!c.equality_witness) throw Error(ErrorCode::NoWitness, c.id + " has no equality witness");
    return evaluate_case(c, c.equality_witness(dim), spec);
}

/// A + εI, the regularization path for singular inputs.
inline ComplexMatrix regularize(const ComplexMatrix& a, double epsilon) {
    return a + epsilon * ComplexMatrix::identity(a.rows());
}

/// Random inputs for one sample. Hermitian inputs have spectral radius in [0.1, 2];
/// positive inputs are their exponentials; invertibles are W₁ e^H W₂; general inputs are
/// Gaussian/√dim (rank-deficient one time in four for cases that allow it); ideal
/// elements are standard complex Gaussian.
inline CaseInputs sample_inputs(const InequalityCase& c, std::size_t dim, std::uint64_t seed, Params params) {
    check_sample_dim(dim);
    Rng rng(seed);
    const auto scale = [&] { return 2.0 * (0.05 + 0.95 * rng.uniform()); };
    CaseInputs in;
    const auto& s = c.signature;
    for (std::size_t k = 0; k < s.hermitian; ++k) {
        const auto sub = rng.next();
        in.hermitian.push_back(random_hermitian(dim, sub, scale()));
    }
    for (std::size_t k = 0; k < s.positive; ++k) {
        const auto sub = rng.next();
        in.positive.push_back(random_positive(dim, sub, scale()));
    }
    for (std::size_t k = 0; k < s.invertible; ++k) {
        const auto sub = rng.next();
        in.invertible.push_back(random_invertible(dim, sub, scale()));
    }
    for (std::size_t k = 0; k < s.general; ++k) {
        const auto sub = rng.next();
        ComplexMatrix g = gaussian_matrix(dim, dim, sub);
        g *= 1.0 / std::sqrt(static_cast<double>(dim));
        if (c.singular_general && rng.uniform() < 0.25) {
            for (std::size_t i = 0; i < dim; ++i) g(i, dim - 1) = 0.0;
        }
        in.general.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < s.ideal; ++k) in.ideal.push_back(gaussian_matrix(dim, dim, rng.next()));
    in.params = std::move(params);
    return in;
}

/// The Heinz mean via the cosh kernel: 2 cosh((t - 1/2)(L_X - R_Y)) applied to A^1/2 T B^1/2,
/// with A = e^X, B = e^Y.
inline ComplexMatrix heinz_mean_cosh_form(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& t,
                                          double s) {
    const TwoSidedOperator d(x, y, Sign::Minus);
    const ComplexMatrix middle = expm_hermitian(x, 0.5) * t * expm_hermitian(y, 0.5);
    return apply_calculus([s](double v) { return 2.0 * std::cosh((s - 0.5) * v); }, d, middle);
}

} // namespace opineq
