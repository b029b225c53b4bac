#pragma once

// Seeded verification campaigns, counterexample search, and replay.
//
// Every sample is a pure function of (master seed, case id, dim, norm id, index) through
// derive_seed(), so campaigns can be evaluated in any order or on any number of workers
// and still aggregate to the same report.

#include "opineq/cases.hpp"
#include "opineq/matrix_json.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace opineq {

inline constexpr const char* kVersion = "0.1.0";

struct CampaignConfig {
    std::vector<std::string> case_ids; // empty: every case not flagged expected_false
    std::vector<std::size_t> dims{2, 3, 5, 8};
    std::size_t samples = 200;
    std::vector<NormSpec> norms = default_norm_sweep();
    std::uint64_t seed = 42;
    double tolerance = 1e-8;
    std::map<std::string, std::vector<Params>> grids; // per-case override of the default grid
    std::size_t workers = 1;
    std::size_t max_violations = 20;
};

/// One evaluated sample, enough to regenerate its inputs.
struct SampleKey {
    std::string case_id;
    std::size_t dim = 0;
    NormSpec norm = NormSpec::operator_norm();
    std::size_t index = 0;
    std::uint64_t derived_seed = 0;
    Params params;
};

struct Witness {
    SampleKey key;
    CaseInputs inputs;
    Margin margin;
};

struct Violation {
    SampleKey key;
    Margin margin;
};

struct CaseRecord {
    std::string id;
    std::vector<Params> params;
    std::size_t samples = 0;
    std::vector<NormSpec> norms;
    double min_margin = std::numeric_limits<double>::infinity(); // relative: signed_margin / scale
    double min_signed_margin = std::numeric_limits<double>::infinity();
    std::optional<Witness> witness;
    std::vector<Violation> violations; // worst first, capped
    std::size_t violation_count = 0;
    std::vector<std::string> errors;
};

struct CampaignReport {
    std::string version = kVersion;
    CampaignConfig config;
    std::vector<CaseRecord> cases;
    double wallclock_ms = 0.0;

    bool passed() const {
        return std::all_of(cases.begin(), cases.end(),
                           [](const CaseRecord& c) { return c.violation_count == 0 && c.errors.empty(); });
    }
};

namespace detail {

struct SampleResult {
    std::optional<Margin> margin;
    std::string error;
};

inline SampleKey make_key(const InequalityCase& c, const std::vector<Params>& grid, std::uint64_t master,
                          std::size_t dim, const NormSpec& norm, std::size_t index) {
    return {c.id, dim, norm, index, derive_seed(master, c.id, dim, norm.to_string(), index), grid[index % grid.size()]};
}

inline SampleResult evaluate_sample(const InequalityCase& c, const SampleKey& key, ParamCheck check) {
    try {
        const CaseInputs in = sample_inputs(c, key.dim, key.derived_seed, key.params);
        return {evaluate_case(c, in, key.norm, check), {}};
    } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
    }
}

/// Evaluates fn(k) for k in [0, count) on `workers` threads, results in index order.
template <class Fn>
std::vector<SampleResult> parallel_map(std::size_t count, std::size_t workers, Fn&& fn) {
    std::vector<SampleResult> out(count);
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) out[k] = fn(k);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

/// Strict ordering for aggregation: smaller relative margin first, then sample position.
inline bool worse(double a_rel, std::size_t a_pos, double b_rel, std::size_t b_pos) {
    return a_rel < b_rel || (a_rel == b_rel && a_pos < b_pos);
}

} // namespace detail

inline std::vector<NormSpec> norms_for(const InequalityCase& c, const std::vector<NormSpec>& requested) {
    if (c.norms.empty()) return requested;
    std::vector<NormSpec> out;
    for (const auto& n : requested)
        if (std::find(c.norms.begin(), c.norms.end(), n) != c.norms.end()) out.push_back(n);
    return out.empty() ? c.norms : out;
}

inline CaseRecord run_case(const InequalityCase& c, const CampaignConfig& config) {
    CaseRecord rec;
    rec.id = c.id;
    const auto grid_it = config.grids.find(c.id);
    rec.params = grid_it != config.grids.end() ? grid_it->second : c.default_grid;
    if (rec.params.empty()) throw Error(ErrorCode::InvalidParameter, c.id + ": empty parameter grid");
    for (const auto& p : rec.params) resolve_params(c, p, ParamCheck::Claim);
    rec.norms = norms_for(c, config.norms);

    std::vector<SampleKey> keys;
    for (std::size_t dim : config.dims)
        for (const auto& norm : rec.norms)
            for (std::size_t i = 0; i < config.samples; ++i)
                keys.push_back(detail::make_key(c, rec.params, config.seed, dim, norm, i));

    const auto results = detail::parallel_map(keys.size(), config.workers, [&](std::size_t k) {
        return detail::evaluate_sample(c, keys[k], ParamCheck::Claim);
    });

    std::optional<std::size_t> best;
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        if (!r.margin) {
            if (rec.errors.size() < config.max_violations) {
                rec.errors.push_back(std::to_string(keys[k].derived_seed) + ": " + r.error);
            }
            continue;
        }
        ++rec.samples;
        if (!best || detail::worse(r.margin->relative(), k, results[*best].margin->relative(), *best)) best = k;
        if (r.margin->violates(config.tolerance)) bad.push_back(k);
    }
    rec.violation_count = bad.size();
    std::sort(bad.begin(), bad.end(), [&](std::size_t a, std::size_t b) {
        return detail::worse(results[a].margin->relative(), a, results[b].margin->relative(), b);
    });
    if (bad.size() > config.max_violations) bad.resize(config.max_violations);
    for (std::size_t k : bad) rec.violations.push_back({keys[k], *results[k].margin});

    if (best) {
        const auto& key = keys[*best];
        rec.min_margin = results[*best].margin->relative();
        rec.min_signed_margin = results[*best].margin->signed_margin;
        rec.witness = Witness{key, sample_inputs(c, key.dim, key.derived_seed, key.params), *results[*best].margin};
    }
    return rec;
}

inline CampaignReport run_campaign(const CampaignConfig& config) {
    if (config.samples < 1) throw Error(ErrorCode::InvalidParameter, "samples must be >= 1");
    if (!(config.tolerance > 0.0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
    if (config.dims.empty() || config.norms.empty()) throw Error(ErrorCode::InvalidParameter, "empty dims or norms");
    for (std::size_t d : config.dims) check_sample_dim(d);

    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = config;
    const auto ids = config.case_ids.empty() ? verified_case_ids() : config.case_ids;
    for (const auto& id : ids) report.cases.push_back(run_case(find_case(id), config));
    report.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---- counterexample search ---------------------------------------------------------------

struct SearchConfig {
    std::size_t budget = 100000;
    std::uint64_t seed = 7;
    std::vector<std::size_t> dims{2, 3};
    std::vector<NormSpec> sweep = default_norm_sweep();
    std::size_t operator_phase = 50000; // leading samples that use the operator norm only
    double threshold = 1e-6;
};

/// Sample k of a search. The schedule depends on k alone, never on the budget.
inline SampleKey search_key(const InequalityCase& c, const std::vector<Params>& grid, const SearchConfig& config,
                            std::size_t k) {
    std::size_t dim;
    NormSpec norm = NormSpec::operator_norm();
    if (k < config.operator_phase) {
        dim = config.dims[k % config.dims.size()];
    } else {
        const std::size_t j = k - config.operator_phase;
        norm = config.sweep[j % config.sweep.size()];
        dim = config.dims[(j / config.sweep.size()) % config.dims.size()];
    }
    return detail::make_key(c, grid, config.seed, dim, norm, k);
}

struct SearchResult {
    std::optional<Witness> witness;
    std::size_t evaluated = 0;
    std::size_t errors = 0;
};

/// Looks for inputs with signed_margin < -threshold * scale. `params` are checked against the
/// evaluable domain only, so parameters outside the claimed range may be probed.
inline SearchResult counterexample_search(std::string_view id, const Params& params, const SearchConfig& config) {
    const auto& c = find_case(id);
    if (config.budget < 1) throw Error(ErrorCode::InvalidParameter, "budget must be >= 1");
    if (config.dims.empty() || config.sweep.empty()) throw Error(ErrorCode::InvalidParameter, "empty dims or norms");
    for (std::size_t d : config.dims) check_sample_dim(d);
    std::vector<Params> grid;
    if (params.empty() && !c.signature.params.empty()) {
        grid = c.default_grid;
    } else {
        grid.push_back(resolve_params(c, params, ParamCheck::Hard));
    }
    SearchResult out;
    for (std::size_t k = 0; k < config.budget; ++k) {
        const SampleKey key = search_key(c, grid, config, k);
        const auto r = detail::evaluate_sample(c, key, ParamCheck::Hard);
        ++out.evaluated;
        if (!r.margin) {
            ++out.errors;
            continue;
        }
        if (r.margin->signed_margin < -config.threshold * r.margin->scale) {
            out.witness = Witness{key, sample_inputs(c, key.dim, key.derived_seed, key.params), *r.margin};
            break;
        }
    }
    return out;
}

// ---- JSON --------------------------------------------------------------------------------

inline nlohmann::json params_json(const Params& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

inline nlohmann::json margin_json(const Margin& m) {
    return {{"lhs", m.lhs}, {"rhs", m.rhs}, {"signed_margin", m.signed_margin}, {"scale", m.scale}};
}

inline nlohmann::json inputs_json(const CaseInputs& in) {
    nlohmann::json list = nlohmann::json::array();
    const auto push = [&](const char* role, const std::vector<ComplexMatrix>& group) {
        for (const auto& m : group) {
            auto j = to_json(m);
            j["role"] = role;
            list.push_back(std::move(j));
        }
    };
    push("hermitian", in.hermitian);
    push("positive", in.positive);
    push("invertible", in.invertible);
    push("general", in.general);
    push("ideal", in.ideal);
    return list;
}

inline nlohmann::json witness_json(const Witness& w) {
    return {{"case", w.key.case_id},
            {"derived_seed", w.key.derived_seed},
            {"dim", w.key.dim},
            {"norm", w.key.norm.to_string()},
            {"index", w.key.index},
            {"params", params_json(w.key.params)},
            {"margin", margin_json(w.margin)},
            {"matrices", inputs_json(w.inputs)}};
}

inline nlohmann::json report_json(const CampaignReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json params = nlohmann::json::array();
        for (const auto& p : c.params) params.push_back(params_json(p));
        nlohmann::json norms = nlohmann::json::array();
        for (const auto& n : c.norms) norms.push_back(n.to_string());
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : c.violations) {
            violations.push_back({{"derived_seed", v.key.derived_seed},
                                  {"dim", v.key.dim},
                                  {"norm", v.key.norm.to_string()},
                                  {"index", v.key.index},
                                  {"params", params_json(v.key.params)},
                                  {"margin", margin_json(v.margin)}});
        }
        nlohmann::json rec = {{"id", c.id},
                              {"params", params},
                              {"samples", c.samples},
                              {"norms", norms},
                              {"violation_count", c.violation_count},
                              {"violations", violations},
                              {"errors", c.errors}};
        if (c.witness) {
            rec["min_margin"] = c.min_margin;
            rec["min_signed_margin"] = c.min_signed_margin;
            rec["witness"] = witness_json(*c.witness);
        } else {
            rec["min_margin"] = nullptr;
            rec["min_signed_margin"] = nullptr;
            rec["witness"] = nullptr;
        }
        cases.push_back(std::move(rec));
    }
    nlohmann::json norms = nlohmann::json::array();
    for (const auto& n : r.config.norms) norms.push_back(n.to_string());
    return {{"version", r.version},
            {"seed", r.config.seed},
            {"config",
             {{"dims", r.config.dims},
              {"samples", r.config.samples},
              {"norms", norms},
              {"tolerance", r.config.tolerance}}},
            {"passed", r.passed()},
            {"cases", cases},
            {"wallclock_ms", r.wallclock_ms}};
}

inline nlohmann::json search_json(std::string_view id, const Params& params, const SearchConfig& config,
                                  const SearchResult& result) {
    return {{"version", kVersion},
            {"seed", config.seed},
            {"search",
             {{"case", std::string(id)},
              {"params", params_json(params)},
              {"budget", config.budget},
              {"evaluated", result.evaluated},
              {"errors", result.errors},
              {"threshold", config.threshold},
              {"found", result.witness.has_value()}}},
            {"witness", result.witness ? witness_json(*result.witness) : nlohmann::json(nullptr)}};
}

/// Rebuilds a witness from its JSON form (inputs are read from the serialized matrices).
inline Witness witness_from_json(const nlohmann::json& j) {
    try {
        Witness w;
        w.key.case_id = j.at("case").get<std::string>();
        w.key.derived_seed = j.at("derived_seed").get<std::uint64_t>();
        w.key.dim = j.at("dim").get<std::size_t>();
        w.key.norm = NormSpec::parse(j.at("norm").get<std::string>());
        w.key.index = j.value("index", std::size_t{0});
        for (const auto& [k, v] : j.at("params").items()) w.key.params[k] = v.get<double>();
        for (const auto& m : j.at("matrices")) {
            const auto role = m.at("role").get<std::string>();
            auto mat = matrix_from_json(m);
            if (role == "hermitian") w.inputs.hermitian.push_back(std::move(mat));
            else if (role == "positive") w.inputs.positive.push_back(std::move(mat));
            else if (role == "invertible") w.inputs.invertible.push_back(std::move(mat));
            else if (role == "general") w.inputs.general.push_back(std::move(mat));
            else if (role == "ideal") w.inputs.ideal.push_back(std::move(mat));
            else throw Error(ErrorCode::ParseError, "unknown matrix role '" + role + "'");
        }
        w.inputs.params = w.key.params;
        if (j.contains("margin")) {
            const auto& m = j.at("margin");
            w.margin = {m.at("lhs").get<double>(), m.at("rhs").get<double>(), m.at("signed_margin").get<double>(),
                        m.at("scale").get<double>()};
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("witness JSON: ") + e.what());
    }
}

/// Re-evaluates a witness from its stored matrices.
inline Margin replay(const Witness& w) {
    return evaluate_case(find_case(w.key.case_id), w.inputs, w.key.norm, ParamCheck::Hard);
}

} // namespace opineq
