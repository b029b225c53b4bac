// opineq: command-line front end for the verification harness.
//
// Exit codes: 0 pass / search exhausted, 1 violation or witness found, 2 usage error.

#include "opineq/opineq.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace opineq;

constexpr int kExitPass = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    for (const auto& d : split(text, ',')) {
        const double v = detail::parse_double(d, "--dims");
        if (v < 1 || v != std::floor(v)) throw Error(ErrorCode::ParseError, "bad dimension '" + d + "'");
        dims.push_back(static_cast<std::size_t>(v));
    }
    return dims;
}

std::vector<NormSpec> parse_norms(const std::string& text) {
    std::vector<NormSpec> norms;
    for (const auto& n : split(text, ',')) norms.push_back(NormSpec::parse(n));
    return norms;
}

Params parse_params(const std::vector<std::string>& pairs) {
    Params out;
    for (const auto& p : pairs) {
        for (const auto& [k, v] : detail::parse_assignments(p, "--param")) out[k] = v;
    }
    return out;
}

/// "<re>+<im>i", "<re>-<im>i", "<re>" or "<im>i".
Complex parse_point(std::string text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty point");
    if (text.back() != 'i') return {detail::parse_double(text, "--point"), 0.0};
    text.pop_back();
    std::size_t split_at = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string::npos) {
        if (text.empty() || text == "+") return {0.0, 1.0};
        if (text == "-") return {0.0, -1.0};
        return {0.0, detail::parse_double(text, "--point")};
    }
    const std::string re = text.substr(0, split_at);
    std::string im = text.substr(split_at);
    if (im == "+" || im == "-") im += "1";
    if (im.front() == '+') im.erase(0, 1);
    return {detail::parse_double(re, "--point"), detail::parse_double(im, "--point")};
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

std::string format_params(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ",";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s=%.6g", k.c_str(), v);
        s += buf;
    }
    return s.empty() ? "-" : s;
}

int cmd_list(bool include_false) {
    for (const auto& c : registry()) {
        if (c.expected_false && !include_false) continue;
        std::string params;
        for (const auto& p : c.signature.params) params += (params.empty() ? "" : ",") + p.name;
        std::printf("%-28s %s  params[%s]%s\n    %s\n", c.id.c_str(), std::string(to_string(c.relation)).c_str(),
                    params.c_str(), c.expected_false ? "  (expected false)" : "", c.description.c_str());
    }
    return kExitPass;
}

int cmd_verify(const std::string& case_id, const std::string& dims, std::size_t samples, const std::string& norms,
               std::uint64_t seed, double tol, const std::vector<std::string>& param_pairs, std::size_t workers,
               const std::string& report_path) {
    CampaignConfig config;
    if (case_id != "all") config.case_ids = {case_id};
    config.dims = parse_dims(dims);
    config.samples = samples;
    config.norms = parse_norms(norms);
    config.seed = seed;
    config.tolerance = tol;
    config.workers = workers;
    if (!param_pairs.empty()) {
        if (case_id == "all") throw Error(ErrorCode::InvalidParameter, "--param needs a single --case");
        config.grids[case_id] = {parse_params(param_pairs)};
    }
    const auto report = run_campaign(config);
    for (const auto& c : report.cases) {
        const bool ok = c.violation_count == 0 && c.errors.empty();
        std::printf("%-4s %-28s samples=%-6zu min_margin=%+.3e violations=%zu errors=%zu\n", ok ? "PASS" : "FAIL",
                    c.id.c_str(), c.samples, c.min_margin, c.violation_count, c.errors.size());
    }
    std::printf("%s in %.0f ms\n", report.passed() ? "all cases pass" : "violations found", report.wallclock_ms);
    write_json(report_path, report_json(report));
    return report.passed() ? kExitPass : kExitFound;
}

int cmd_search(const std::string& case_id, const std::vector<std::string>& param_pairs, std::size_t budget,
               std::uint64_t seed, const std::string& dims, const std::string& norms, const std::string& report_path) {
    SearchConfig config;
    config.budget = budget;
    config.seed = seed;
    config.dims = parse_dims(dims);
    config.sweep = parse_norms(norms);
    const Params params = parse_params(param_pairs);
    const auto result = counterexample_search(case_id, params, config);
    write_json(report_path, search_json(case_id, params, config, result));
    if (!result.witness) {
        std::printf("no witness in %zu samples\n", result.evaluated);
        return kExitPass;
    }
    const auto& w = *result.witness;
    std::printf("witness after %zu samples: dim=%zu norm=%s seed=%llu params=%s lhs=%.12g rhs=%.12g "
                "relative_margin=%+.3e\n",
                result.evaluated, w.key.dim, w.key.norm.to_string().c_str(),
                static_cast<unsigned long long>(w.key.derived_seed), format_params(w.key.params).c_str(), w.margin.lhs,
                w.margin.rhs, w.margin.relative());
    return kExitFound;
}

int cmd_eval(const std::string& function, const std::string& point, std::size_t truncate) {
    const auto f = function_from_id(function);
    const Complex z = parse_point(point);
    const Complex closed = f.closed_form(z);
    const Complex product = weierstrass_truncated(f, z, truncate);
    const double abs_err = std::abs(product - closed);
    std::printf("function    %s\n", f.id.c_str());
    std::printf("zero_order  %d\n", f.zero_order);
    std::printf("leading     %.12g%+.12gi\n", f.leading.real(), f.leading.imag());
    std::printf("exponent    %.12g%+.12gi\n", f.exponent.real(), f.exponent.imag());
    std::printf("closed      %.15g%+.15gi\n", closed.real(), closed.imag());
    std::printf("truncated   %.15g%+.15gi  (terms=%zu)\n", product.real(), product.imag(), truncate);
    std::printf("abs_error   %.3e\n", abs_err);
    if (std::abs(closed) > 0.0) std::printf("rel_error   %.3e\n", abs_err / std::abs(closed));
    return kExitPass;
}

int cmd_replay(const std::string& path, const std::string& case_id) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidParameter, "cannot read '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    std::vector<nlohmann::json> witnesses;
    if (j.contains("witness") && !j["witness"].is_null()) witnesses.push_back(j["witness"]);
    if (j.contains("cases")) {
        for (const auto& c : j["cases"])
            if (!c["witness"].is_null() && (case_id.empty() || c["id"] == case_id)) witnesses.push_back(c["witness"]);
    }
    if (witnesses.empty()) throw Error(ErrorCode::NoWitness, "no witness in '" + path + "'");
    bool any_negative = false;
    bool all_match = true;
    for (const auto& wj : witnesses) {
        const auto w = witness_from_json(wj);
        const auto m = replay(w);
        const bool same = m.lhs == w.margin.lhs && m.rhs == w.margin.rhs;
        all_match = all_match && same;
        any_negative = any_negative || m.signed_margin < 0.0;
        std::printf("%-28s lhs=%.17g rhs=%.17g relative_margin=%+.3e %s\n", w.key.case_id.c_str(), m.lhs, m.rhs,
                    m.relative(), same ? "bit-exact" : "MISMATCH");
    }
    if (!all_match) return kExitFound;
    return any_negative ? kExitFound : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for norm inequalities in matrix ideals"};
    app.require_subcommand(1);

    bool list_all = false;
    auto* list = app.add_subcommand("list-cases", "List registered inequality cases");
    list->add_flag("--all", list_all, "Include printed forms known to be false");

    std::string v_case = "all", v_dims = "2,3,5,8", v_norms = "s1,s1.5,s2,s3,sinf,kf2", v_report;
    std::size_t v_samples = 200, v_workers = 1;
    std::uint64_t v_seed = 42;
    double v_tol = 1e-8;
    std::vector<std::string> v_params;
    auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
    verify->add_option("--case", v_case, "Case id or 'all'");
    verify->add_option("--dims", v_dims, "Comma-separated dimensions");
    verify->add_option("--samples", v_samples, "Samples per (case, dim, norm)");
    verify->add_option("--norms", v_norms, "Comma-separated norm specs");
    verify->add_option("--seed", v_seed, "Master seed");
    verify->add_option("--tol", v_tol, "Relative violation tolerance");
    verify->add_option("--param", v_params, "name=value, replaces the default grid")->take_all();
    verify->add_option("--workers", v_workers, "Worker threads");
    verify->add_option("--report", v_report, "Write the JSON report here");

    std::string s_case, s_dims = "2,3", s_norms = "s1,s1.5,s2,s3,sinf,kf2", s_report;
    std::vector<std::string> s_params;
    std::size_t s_budget = 100000;
    std::uint64_t s_seed = 7;
    auto* search = app.add_subcommand("search", "Search for a counterexample");
    search->add_option("--case", s_case, "Case id")->required();
    search->add_option("--param", s_params, "name=value")->take_all();
    search->add_option("--budget", s_budget, "Maximum number of samples");
    search->add_option("--seed", s_seed, "Master seed");
    search->add_option("--dims", s_dims, "Comma-separated dimensions");
    search->add_option("--norms", s_norms, "Norms for the sweep phase");
    search->add_option("--report", s_report, "Write the JSON report here");

    std::string e_function, e_point;
    std::size_t e_truncate = 100;
    auto* eval = app.add_subcommand("eval", "Compare a truncated Weierstrass product with the closed form");
    eval->add_option("--function", e_function, "Catalog id, e.g. cosh or cpr:r=1,theta=0")->required();
    eval->add_option("--point", e_point, "<re>+<im>i")->required();
    eval->add_option("--truncate", e_truncate, "Number of root factors");

    std::string r_report, r_case;
    auto* replay_cmd = app.add_subcommand("replay", "Re-evaluate witnesses stored in a report");
    replay_cmd->add_option("--report", r_report, "Report JSON")->required();
    replay_cmd->add_option("--case", r_case, "Only this case (campaign reports)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list) return cmd_list(list_all);
        if (*verify) {
            return cmd_verify(v_case, v_dims, v_samples, v_norms, v_seed, v_tol, v_params, v_workers, v_report);
        }
        if (*search) return cmd_search(s_case, s_params, s_budget, s_seed, s_dims, s_norms, s_report);
        if (*eval) return cmd_eval(e_function, e_point, e_truncate);
        if (*replay_cmd) return cmd_replay(r_report, r_case);
    } catch (const opineq::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
