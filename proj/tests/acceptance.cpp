// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [--only N]

#include "oracles.hpp"

#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace opineq;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome full_campaign() {
    CampaignConfig config;
    config.workers = workers();
    const auto report = run_campaign(config);
    std::size_t violations = 0;
    std::size_t errors = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_id;
    for (const auto& c : report.cases) {
        violations += c.violation_count;
        errors += c.errors.size();
        if (c.min_margin < worst) {
            worst = c.min_margin;
            worst_id = c.id;
        }
    }
    const bool fast = report.wallclock_ms <= 300000.0;
    return {violations == 0 && errors == 0 && fast,
            std::to_string(report.cases.size()) + " cases, " + std::to_string(violations) + " violations, " +
                std::to_string(errors) + " errors, min relative margin " + fmt(worst) + " (" + worst_id + "), " +
                fmt(report.wallclock_ms / 1000.0) + " s"};
}

Outcome exact_constants() {
    bool ok = true;
    double worst = 0.0;
    const auto& zhan = find_case("zhan");
    for (const auto& spec : default_norm_sweep()) {
        for (std::size_t dim : {2u, 3u, 5u}) {
            const auto in = zhan.equality_witness(dim);
            const auto m = evaluate_case(zhan, in, spec);
            const double two_t = 2.0 * norm(in.ideal[0], spec);
            const double err = std::max(std::abs(m.lhs - two_t), std::abs(m.rhs - two_t));
            worst = std::max(worst, err);
            ok = ok && err <= 1e-10;
        }
    }
    const auto& inv = find_case("cpr_invertible");
    double worst_inv = 0.0;
    for (double theta : {0.0, pi / 2}) {
        for (const auto& spec : default_norm_sweep()) {
            auto in = inv.equality_witness(3);
            in.params = {{"theta", theta}};
            const auto m = evaluate_case(inv, in, spec);
            const double expected = std::sqrt(2.0 * (1.0 + std::cos(theta))) * norm(in.ideal[0], spec);
            const double err = std::max(std::abs(m.signed_margin), std::abs(m.rhs - expected)) / m.scale;
            worst_inv = std::max(worst_inv, err);
            ok = ok && err <= 1e-9;
        }
    }
    return {ok, "zhan max |side - 2||T|||| " + fmt(worst) + ", cpr_invertible max relative gap " + fmt(worst_inv)};
}

Outcome oracle_equivalence() {
    const std::vector<std::function<Complex(double)>> kernels{
        [](double v) { return Complex(std::exp(v)); },  [](double v) { return Complex(std::cosh(v)); },
        [](double v) { return Complex(std::sinh(v)); }, [](double v) { return Complex(std::tanh(v)); },
        [](double v) { return Complex(v); },            [](double v) { return Complex(v * v); }};
    double worst = 0.0;
    std::size_t count = 0;
    for (std::size_t n : {2u, 3u, 4u}) {
        for (std::size_t f = 0; f < kernels.size(); ++f) {
            for (std::uint64_t k = 0; k < 100; ++k) {
                const std::uint64_t seed = derive_seed(3, "oracle", n, std::to_string(f), k);
                Rng rng(seed);
                const Sign sign = rng.uniform() < 0.5 ? Sign::Plus : Sign::Minus;
                const TwoSidedOperator op(random_hermitian(n, rng.next(), 2.0), random_hermitian(n, rng.next(), 2.0),
                                          sign);
                const auto t = gaussian_matrix(n, n, rng.next());
                worst = std::max(worst, relative_error(apply_calculus(kernels[f], op, t),
                                                       oracle::flattened_apply(kernels[f], op, t)));
                ++count;
            }
        }
    }
    return {worst <= 1e-10, std::to_string(count) + " instances, max relative discrepancy " + fmt(worst)};
}

Outcome dexp_checks() {
    double ratio_lo = 1.0;
    double ratio_hi = 0.0;
    double worst = 0.0;
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (std::uint64_t k = 0; k < 10; ++k) {
            const auto x = random_hermitian(n, 1000 * n + k, 1.5);
            const auto y = random_hermitian(n, 2000 * n + k, 1.0);
            const auto d = dexp(x, y);
            const auto ex = oracle::expm_taylor(x);
            const auto fd_error = [&](double h) {
                return ((oracle::expm_taylor(x + h * y) - ex) * Complex(1.0 / h) - d).frobenius_norm();
            };
            const double ratio = fd_error(5e-4) / fd_error(1e-3);
            ratio_lo = std::min(ratio_lo, ratio);
            ratio_hi = std::max(ratio_hi, ratio);
            const auto g = gaussian_matrix(n, n, 3000 * n + k);
            worst = std::max(worst, relative_error(dexp(x, g), oracle::dexp(x, g)));
        }
    }
    const bool ok = ratio_lo >= 0.4 && ratio_hi <= 0.6 && worst <= 1e-9;
    return {ok, "finite-difference error ratio in [" + fmt(ratio_lo) + ", " + fmt(ratio_hi) +
                    "], max quadrature discrepancy " + fmt(worst)};
}

Outcome weierstrass_checks() {
    const auto f = sinh_over_z();
    const double exact = std::sinh(1.0);
    std::vector<double> errors;
    for (std::size_t n : {10u, 100u, 1000u})
        errors.push_back(std::abs(weierstrass_truncated(f, 1.0, n) - exact) / exact);
    const bool monotone = errors[0] > errors[1] && errors[1] > errors[2];
    const auto g = z_cosh_minus_sinh();
    const double exact_g = std::cosh(1.0) - std::sinh(1.0);
    const double err_g = std::abs(weierstrass_truncated(g, 1.0, 1000) - exact_g) / exact_g;
    const bool ok = errors[2] <= 1e-3 && monotone && err_g <= 1e-3;
    return {ok, "sinh(z)/z errors " + fmt(errors[0]) + ", " + fmt(errors[1]) + ", " + fmt(errors[2]) +
                    "; z cosh z - sinh z error " + fmt(err_g)};
}

Outcome root_checks() {
    const double first = catalog_roots("z_cosh_minus_sinh", 1).front();
    const auto roots = catalog_roots("cosh", 100);
    const auto cpr = catalog_roots("cpr:r=0,theta=0", 100);
    double worst = 0.0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        worst = std::max(worst, std::abs(roots[k] - (k + 0.5) * pi));
        worst = std::max(worst, std::abs(cpr[k] - (k + 0.5) * pi));
    }
    const bool ok = std::abs(first - 4.493409) <= 1e-6 && worst <= 1e-12;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", first);
    return {ok, std::string("first tan root ") + buf + ", max cosh root error " + fmt(worst)};
}

Outcome proof_engine() {
    const double floor = 1e-10;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t count = 0;
    bool ok = true;
    for (const char* id : {"factor_expansivity", "resolvent_contraction", "dissipative_expansive"}) {
        const auto& c = find_case(id);
        for (const auto& spec : default_norm_sweep()) {
            for (std::size_t k = 0; k < 100; ++k) {
                const std::size_t dim = 2 + k % 3;
                const auto seed = derive_seed(2024, id, dim, spec.to_string(), k);
                const auto m =
                    evaluate_case(c, sample_inputs(c, dim, seed, c.default_grid[k % c.default_grid.size()]), spec);
                worst = std::min(worst, m.relative());
                ok = ok && !m.violates(floor);
                ++count;
            }
        }
    }
    // Root factors of every catalog function (both signs for symmetric lists).
    const Complex i(0.0, 1.0);
    for (const auto& f : {sinh_over_z(), cosh_function(), z_cosh_minus_sinh(), cpr_function(1.0, 0.0),
                          cpr_function(0.0, pi / 3), exp_minus(pi / 2), gamma_reciprocal()}) {
        auto roots = f.roots(10);
        if (f.symmetric)
            for (std::size_t k = 0; k < 10; ++k) roots.push_back(-roots[k]);
        for (const auto& spec : default_norm_sweep()) {
            for (std::size_t k = 0; k < roots.size(); ++k) {
                Rng rng(derive_seed(2025, f.id, k, spec.to_string(), 0));
                const TwoSidedOperator op(random_hermitian(3, rng.next(), 2.0), random_hermitian(3, rng.next(), 2.0));
                const auto t = gaussian_matrix(3, 3, rng.next());
                const double root = roots[k];
                const auto g = [&](double x) {
                    const Complex w = x / (i * root);
                    return (1.0 - w) * std::exp(w);
                };
                const auto m = make_margin(Relation::GreaterEqual,
                                           Sides{norm(apply_calculus(g, op, t), spec), norm(t, spec)});
                worst = std::min(worst, m.relative());
                ok = ok && !m.violates(floor);
                ++count;
            }
        }
    }
    return {ok, std::to_string(count) + " instances, min relative margin " + fmt(worst)};
}

Outcome falsification() {
    SearchConfig config;
    config.budget = 100000;
    config.dims = {2};
    config.sweep = {NormSpec::operator_norm()};
    const auto result = counterexample_search("zhan", {{"r", 3.0}}, config);
    if (!result.witness) {
        return {false, "no witness in " + std::to_string(result.evaluated) +
                           " samples (zhan, r = 3, dim 2, operator norm); see README for the dimension-2 analysis"};
    }
    const auto text = search_json("zhan", {{"r", 3.0}}, config, result).dump();
    const auto back = witness_from_json(nlohmann::json::parse(text).at("witness"));
    const auto m = replay(back);
    const bool exact = m.signed_margin == result.witness->margin.signed_margin;
    return {exact, "witness at sample " + std::to_string(result.witness->key.index) + ", relative margin " +
                       fmt(result.witness->margin.relative()) + (exact ? ", replay exact" : ", replay mismatch")};
}

Outcome gamma_path() {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double t = -10.0 + 20.0 * k / 199.0;
        const double exact = t == 0.0 ? 1.0 : pi * t / std::sinh(pi * t);
        worst = std::max(worst, std::abs(std::norm(complex_gamma(Complex(1.0, t))) - exact));
    }
    CampaignConfig config;
    config.case_ids = {"gamma_contraction"};
    config.workers = workers();
    const auto report = run_campaign(config);
    const auto& rec = report.cases.front();
    const bool ok = worst <= 1e-10 && report.passed();
    return {ok, "max | |Gamma(1+it)|^2 - pi t/sinh(pi t) | " + fmt(worst) + ", gamma_contraction " +
                    std::to_string(rec.samples) + " samples, min relative margin " + fmt(rec.min_margin)};
}

Outcome p2_exactness() {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 50; ++k) {
        const std::size_t n = 2 + k % 3;
        const TwoSidedOperator op(random_hermitian(n, 4000 + k, 2.0), random_hermitian(n, 5000 + k, 2.0),
                                  Sign::Minus);
        const auto map =
            matrix_function_hermitian([](double v) { return Complex(std::tanh(v)); }, superop_flatten(op));
        worst = std::max(worst, std::abs(induced_norm_p2([](double v) { return std::tanh(v); }, op) -
                                         oracle::power_norm(map)));
    }
    CampaignConfig config;
    config.case_ids = {"abs_lipschitz_p2", "invertibility_bound_p2"};
    config.norms = {NormSpec::schatten(2.0)};
    config.workers = workers();
    const auto report = run_campaign(config);
    const bool ok = worst <= 1e-8 && report.passed();
    std::string detail = "max multiplier vs power iteration " + fmt(worst);
    for (const auto& c : report.cases) {
        detail += ", " + c.id + " " + std::to_string(c.samples) + " samples min relative margin " + fmt(c.min_margin);
    }
    return {ok, detail};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
        {"full verification campaign", full_campaign},
        {"exact constants", exact_constants},
        {"calculus vs flattened oracle", oracle_equivalence},
        {"dexp finite differences and quadrature", dexp_checks},
        {"Weierstrass products", weierstrass_checks},
        {"root solver", root_checks},
        {"factor expansivity and resolvent contraction", proof_engine},
        {"zhan r = 3 falsification in dimension 2", falsification},
        {"Gamma path", gamma_path},
        {"p = 2 exactness", p2_exactness},
    };
    return list;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--only") == 0 && a + 1 < argc) {
            only = std::atoi(argv[++a]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--only N]\n");
            return 2;
        }
    }
    const auto& list = criteria();
    if (only < 0 || only > static_cast<int>(list.size())) {
        std::fprintf(stderr, "criterion must be in 1..%zu\n", list.size());
        return 2;
    }
    bool all = true;
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (only != 0 && static_cast<int>(k + 1) != only) continue;
        Outcome out;
        try {
            out = list[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("error: ") + e.what()};
        }
        std::printf("[%s] %zu %s: %s\n", out.pass ? "PASS" : "FAIL", k + 1, list[k].first.c_str(),
                    out.detail.c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
