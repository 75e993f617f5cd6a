#pragma once

// Property verdicts per matroid and batch scanning. A PropertyReport bundles
// every invariant of one matroid with the coefficient-sequence verdicts; the
// scans sweep sparse paving profiles (closed form and realized matroids) and
// ingested catalogs hunting for unimodality / log-concavity counterexamples.
// Counterexamples are data, serialized with full basis lists so they can be
// reconfirmed independently; closed-form disagreements, by contrast, abort.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "invz/arith.hpp"
#include "invz/catalog.hpp"
#include "invz/closed_forms.hpp"
#include "invz/errors.hpp"
#include "invz/kls.hpp"
#include "invz/matroid.hpp"
#include "invz/polynomial.hpp"
#include "invz/stressed.hpp"

namespace invz {

enum class LambdaPolicy { all_feasible, max_only };

inline const char* lambda_policy_name(LambdaPolicy p) {
    return p == LambdaPolicy::all_feasible ? "all-feasible" : "max-only";
}

struct RunConfig {
    int ground_set_limit = kDefaultGroundSetLimit;
    int engine_check_limit = 12;  // engine/closed-form cross-checks above this size are skipped
    int schema_version = 1;
    std::size_t family_budget = 64;
    std::size_t search_node_budget = 4'000'000;
    int scan_k_min = 1, scan_k_max = 4;
    int scan_n_min = 1, scan_n_max = 8;
    LambdaPolicy lambda_policy = LambdaPolicy::all_feasible;
    int parallelism = 1;
    std::string output_path;  // empty: stdout
    bool include_timings = false;

    void validate() const {
        if (ground_set_limit < 1 || engine_check_limit < 1 || schema_version < 1 ||
            family_budget < 1 || search_node_budget < 1 || parallelism < 1)
            throw_validation(errc::validation, "all RunConfig limits must be positive");
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["ground_set_limit"] = ground_set_limit;
        j["engine_check_limit"] = engine_check_limit;
        j["schema_version"] = schema_version;
        j["family_budget"] = family_budget;
        j["search_node_budget"] = search_node_budget;
        j["scan_k"] = {scan_k_min, scan_k_max};
        j["scan_n"] = {scan_n_min, scan_n_max};
        j["lambda_policy"] = lambda_policy_name(lambda_policy);
        j["parallelism"] = parallelism;
        return j;
    }
};

struct YVerdicts {
    bool y_nonnegative = false;
    bool y_palindromic = false;
    bool y_unimodal = false;
    bool y_logconcave_no_internal_zeros = false;
    bool y_gamma_positive = false;
};

/// Verdicts of the inverse Z-polynomial at its palindromic center rank(M).
/// A non-palindromic Y would contradict the engine's own guarantees, so that
/// case is promoted to an internal error when gamma is requested.
inline std::pair<YVerdicts, GammaVector> y_verdicts(const IntPolynomial& y, int rank) {
    YVerdicts v;
    v.y_nonnegative = is_nonnegative(y);
    v.y_palindromic = is_palindromic(y, rank);
    v.y_unimodal = is_unimodal(y);
    v.y_logconcave_no_internal_zeros = is_log_concave_no_internal_zeros(y);
    GammaVector g;
    try {
        g = gamma_expansion(y, rank);
    } catch (const ValidationError& e) {
        throw_internal(errc::internal_check,
                       std::string("gamma expansion of an engine Y failed: ") + e.what());
    }
    v.y_gamma_positive = g.is_gamma_positive();
    return {v, g};
}

struct PropertyReport {
    std::string matroid_key;
    std::string label;
    int n = 0;
    int rank = 0;
    bool is_paving = false;
    bool is_sparse_paving = false;
    std::optional<BigInt> lambda;  // present iff sparse paving
    IntPolynomial chi, p, q, z, y;
    GammaVector gamma;
    YVerdicts verdicts;
    std::optional<bool> closed_form_agreement;  // present when a closed form applies
    double timing_ms = 0.0;

    nlohmann::json to_json(const RunConfig& cfg) const {
        nlohmann::json j;
        j["schema_version"] = cfg.schema_version;
        j["matroid_key"] = matroid_key;
        j["label"] = label;
        j["n"] = n;
        j["rank"] = rank;
        j["is_paving"] = is_paving;
        j["is_sparse_paving"] = is_sparse_paving;
        if (lambda) j["lambda"] = to_decimal(*lambda);
        j["polynomials"] = {{"chi", chi.to_decimal_strings()},
                            {"P", p.to_decimal_strings()},
                            {"Q", q.to_decimal_strings()},
                            {"Z", z.to_decimal_strings()},
                            {"Y", y.to_decimal_strings()}};
        j["gamma"] = gamma.to_decimal_strings();
        j["verdicts"] = {{"y_nonnegative", verdicts.y_nonnegative},
                         {"y_palindromic", verdicts.y_palindromic},
                         {"y_unimodal", verdicts.y_unimodal},
                         {"y_logconcave_no_internal_zeros",
                          verdicts.y_logconcave_no_internal_zeros},
                         {"y_gamma_positive", verdicts.y_gamma_positive}};
        if (closed_form_agreement) j["closed_form_agreement"] = *closed_form_agreement;
        j["config"] = cfg.to_json();
        if (cfg.include_timings) j["timing_ms"] = timing_ms;
        return j;
    }
};

/// Compute every invariant and verdict for one matroid. When the matroid is
/// uniform or sparse paving, the engine values are additionally held against
/// the closed forms; a mismatch is an InternalCheckError, never a report.
inline PropertyReport analyze(Engine& eng, const Matroid& m, const RunConfig& cfg = {}) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    PropertyReport r;
    r.label = m.label();
    r.n = m.size();
    r.rank = m.rank();
    Matroid clean = remove_loops(m);
    r.matroid_key = canonical_key(clean);

    r.chi = eng.characteristic(m);
    r.p = eng.kl_p(m);
    r.q = eng.inverse_kl_q(m);
    r.z = eng.z_poly(m);
    r.y = eng.y_poly(m);

    r.is_paving = is_paving(m);
    r.is_sparse_paving = is_sparse_paving(m);
    if (r.is_sparse_paving) r.lambda = BigInt(static_cast<unsigned long>(circuit_hyperplanes(m).size()));

    auto [verdicts, gamma] = y_verdicts(r.y, r.rank);
    r.verdicts = verdicts;
    r.gamma = std::move(gamma);

    if (r.rank >= 1 && is_uniform(m)) {
        bool agree = r.y == y_uniform(r.rank, r.n) && r.z == z_uniform(r.rank, r.n) &&
                     r.q == q_uniform(r.rank, r.n) &&
                     eng.mobius_invariant(m) == mu_uniform(r.rank, r.n);
        r.closed_form_agreement = agree;
    } else if (r.rank >= 1 && r.is_sparse_paving) {
        auto profile = SparsePavingProfile::make(r.rank, r.n, *r.lambda);
        bool agree = r.y == y_sparse_paving(profile);
        for (int i = 0; agree && i <= r.rank; ++i)
            agree = r.y.coeff(i) == sparse_paving_coefficient(profile, i);
        r.closed_form_agreement = agree;
    }
    if (r.closed_form_agreement && !*r.closed_form_agreement)
        throw_internal(errc::internal_check,
                       "engine and closed form disagree on " + r.matroid_key);

    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

struct ScanSummary {
    std::size_t total = 0;
    std::vector<nlohmann::json> counterexamples_unimodal;
    std::vector<nlohmann::json> counterexamples_logconcave;
    std::vector<nlohmann::json> gamma_negative_examples;
    nlohmann::json parameters;

    bool has_counterexamples() const {
        return !counterexamples_unimodal.empty() || !counterexamples_logconcave.empty();
    }

    nlohmann::json to_json(const RunConfig& cfg) const {
        nlohmann::json j;
        j["schema_version"] = cfg.schema_version;
        j["total"] = total;
        j["counterexamples_unimodal"] = counterexamples_unimodal;
        j["counterexamples_logconcave"] = counterexamples_logconcave;
        j["gamma_negative_examples"] = gamma_negative_examples;
        j["parameters"] = parameters;
        return j;
    }
};

namespace detail {

inline nlohmann::json counterexample_record(const std::string& kind, const std::string& key,
                                            const std::string& label,
                                            const IntPolynomial& y) {
    nlohmann::json j;
    j["kind"] = kind;
    j["matroid_key"] = key;
    j["label"] = label;
    j["Y"] = y.to_decimal_strings();
    return j;
}

inline void record_verdicts(ScanSummary& s, const YVerdicts& v, nlohmann::json record,
                            const GammaVector& gamma) {
    if (!v.y_nonnegative || !v.y_palindromic)
        throw_internal(errc::internal_check,
                       "non-negativity/palindromicity violated: " + record.dump());
    if (!v.y_unimodal) s.counterexamples_unimodal.push_back(record);
    if (!v.y_logconcave_no_internal_zeros) s.counterexamples_logconcave.push_back(record);
    if (!v.y_gamma_positive) {
        record["gamma"] = gamma.to_decimal_strings();
        s.gamma_negative_examples.push_back(std::move(record));
    }
}

}  // namespace detail

/// Sweep sparse paving profiles: for every rank k, size n and feasible
/// circuit-hyperplane count lambda, check the closed-form polynomial and
/// realize concrete matroids (up to the family budget) whose engine values
/// must reproduce it. The feasibility bound is necessary but not sufficient,
/// so some (k, n, lambda) admit no matroid; those are reported as unrealized
/// rather than failing.
inline ScanSummary scan_sparse_paving(Engine& eng, int k_min, int k_max, int n_min, int n_max,
                                      LambdaPolicy policy, const RunConfig& cfg = {}) {
    cfg.validate();
    ScanSummary s;
    std::size_t profiles = 0, matroids = 0;
    std::vector<nlohmann::json> unrealized;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = std::max(n_min, k + 1); n <= n_max; ++n) {
            if (n > cfg.ground_set_limit) continue;
            const BigInt lam_max = sparse_paving_lambda_max(k, n);
            std::vector<BigInt> lambdas;
            if (policy == LambdaPolicy::max_only) {
                lambdas.push_back(lam_max);
            } else {
                for (BigInt l = 0; l <= lam_max; ++l) lambdas.push_back(l);
            }
            for (const BigInt& lam : lambdas) {
                auto profile = SparsePavingProfile::make(k, n, lam);
                IntPolynomial closed = y_sparse_paving(profile);
                for (int i = 0; i <= k; ++i)
                    if (closed.coeff(i) != sparse_paving_coefficient(profile, i))
                        throw_internal(errc::internal_check,
                                       "coefficient formula disagrees with the polynomial form");
                auto [v, g] = y_verdicts(closed, k);
                std::string pname = "sparse(k=" + std::to_string(k) + ",n=" + std::to_string(n) +
                                    ",lambda=" + to_decimal(lam) + ")";
                detail::record_verdicts(
                    s, v, detail::counterexample_record("profile", pname, pname, closed), g);
                ++profiles;

                auto family = sparse_paving_family(k, n, lam, FamilyMode::all,
                                                   cfg.family_budget, cfg.search_node_budget);
                if (family.empty()) {
                    nlohmann::json u;
                    u["k"] = k;
                    u["n"] = n;
                    u["lambda"] = to_decimal(lam);
                    unrealized.push_back(std::move(u));
                }
                for (const Matroid& m : family) {
                    PropertyReport r = analyze(eng, m, cfg);
                    if (!r.lambda || *r.lambda != lam)
                        throw_internal(errc::internal_check,
                                       "circuit-hyperplane count disagrees with requested lambda");
                    if (r.y != closed)
                        throw_internal(errc::internal_check,
                                       "engine Y disagrees with the sparse paving closed form");
                    detail::record_verdicts(
                        s, r.verdicts,
                        detail::counterexample_record("matroid", r.matroid_key, r.label, r.y),
                        r.gamma);
                    ++matroids;
                }
            }
        }
    }
    s.total = profiles + matroids;
    s.parameters = {{"scan", "sparse-paving"},
                    {"k_min", k_min},
                    {"k_max", k_max},
                    {"n_min", n_min},
                    {"n_max", n_max},
                    {"lambda_policy", lambda_policy_name(policy)},
                    {"profiles_checked", profiles},
                    {"matroids_checked", matroids},
                    {"unrealized", unrealized},
                    {"config", cfg.to_json()}};
    return s;
}

/// Analyze every catalog entry, in parallel when cfg.parallelism > 1 (the
/// engine cache is shared and idempotent). Counterexamples to unimodality or
/// log-concavity carry the full basis list for independent reconfirmation;
/// aggregation is sorted by canonical key, so the summary does not depend on
/// entry order or thread scheduling.
inline ScanSummary scan_catalog(Engine& eng, std::span<const Matroid> entries,
                                const RunConfig& cfg = {}) {
    cfg.validate();
    std::vector<PropertyReport> reports(entries.size());
    const int jobs = std::max(1, std::min<int>(cfg.parallelism,
                                               static_cast<int>(entries.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) reports[i] = analyze(eng, entries[i], cfg);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        std::mutex err_mutex;
        std::exception_ptr first_error;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= entries.size()) return;
                    try {
                        reports[i] = analyze(eng, entries[i], cfg);
                    } catch (...) {
                        std::lock_guard<std::mutex> g(err_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& w : workers) w.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    std::vector<const Matroid*> by_report;
    by_report.reserve(entries.size());
    for (const Matroid& m : entries) by_report.push_back(&m);
    // Deterministic aggregation regardless of input order.
    std::vector<std::size_t> order(reports.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return reports[a].matroid_key < reports[b].matroid_key;
    });
    ScanSummary s;
    for (std::size_t idx : order) {
        const PropertyReport& r = reports[idx];
        nlohmann::json record =
            detail::counterexample_record("matroid", r.matroid_key, r.label, r.y);
        record["entry"] = entry_to_json(entry_from_matroid(*by_report[idx]));
        detail::record_verdicts(s, r.verdicts, std::move(record), r.gamma);
        ++s.total;
    }
    s.parameters = {{"scan", "catalog"}, {"entries", entries.size()}, {"config", cfg.to_json()}};
    return s;
}

struct GammaSurveyRow {
    std::string matroid_key;
    GammaVector gamma;
    bool gamma_positive = false;
};

/// Gamma vector of Y per entry, sorted by canonical key.
inline std::vector<GammaSurveyRow> gamma_survey(Engine& eng, std::span<const Matroid> entries) {
    std::vector<GammaSurveyRow> rows;
    for (const Matroid& m : entries) {
        Matroid clean = remove_loops(m);
        GammaSurveyRow row;
        row.matroid_key = canonical_key(clean);
        IntPolynomial y = eng.y_poly(m);
        try {
            row.gamma = gamma_expansion(y, clean.rank());
        } catch (const ValidationError& e) {
            throw_internal(errc::internal_check,
                           std::string("gamma expansion of an engine Y failed: ") + e.what());
        }
        row.gamma_positive = row.gamma.is_gamma_positive();
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const GammaSurveyRow& a, const GammaSurveyRow& b) {
                  return a.matroid_key < b.matroid_key;
              });
    return rows;
}

}  // namespace invz
