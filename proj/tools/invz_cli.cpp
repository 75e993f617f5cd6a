// Command-line front end.
//
//   invz poly <selector> <which>    print one polynomial as JSON
//   invz check <selector>           full property report for one matroid
//   invz scan ...                   sweep sparse paving profiles or a catalog
//   invz relax <selector> --subset  relax a stressed subset, print the entry
//
// Selectors: uniform:k,n | boolean:n | sparse:k,n,lambda | file:path#name.
// stdout carries data only; all diagnostics go to stderr. Exit codes:
// 0 success, 1 scan found a conjecture counterexample, 2 bad input,
// 3 resource limit, 4 failed internal cross-check (a bug, not bad input).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invz/invz.hpp"

namespace {

using nlohmann::json;

struct Selector {
    enum class Kind { uniform, boolean_, sparse, file };
    Kind kind = Kind::uniform;
    int k = 0, n = 0;
    invz::BigInt lambda;
    std::string path, name, text;
};

int safe_stoi(const std::string& text) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        invz::throw_validation(invz::errc::parse_error, "bad number '" + text + "'");
    }
}

Selector parse_selector(const std::string& s) {
    Selector sel;
    sel.text = s;
    auto colon = s.find(':');
    if (colon == std::string::npos)
        invz::throw_validation(invz::errc::parse_error, "selector '" + s + "' has no ':'");
    std::string head = s.substr(0, colon), rest = s.substr(colon + 1);
    auto parse_ints = [&](int expect) {
        std::vector<std::string> parts;
        std::stringstream ss(rest);
        std::string p;
        while (std::getline(ss, p, ',')) parts.push_back(p);
        if (static_cast<int>(parts.size()) != expect)
            invz::throw_validation(invz::errc::parse_error,
                                   "selector '" + s + "' expects " + std::to_string(expect) +
                                       " comma-separated numbers");
        return parts;
    };
    if (head == "uniform") {
        auto p = parse_ints(2);
        sel.kind = Selector::Kind::uniform;
        sel.k = safe_stoi(p[0]);
        sel.n = safe_stoi(p[1]);
    } else if (head == "boolean") {
        auto p = parse_ints(1);
        sel.kind = Selector::Kind::boolean_;
        sel.k = sel.n = safe_stoi(p[0]);
    } else if (head == "sparse") {
        auto p = parse_ints(3);
        sel.kind = Selector::Kind::sparse;
        sel.k = safe_stoi(p[0]);
        sel.n = safe_stoi(p[1]);
        sel.lambda = invz::bigint_from_decimal(p[2]);
    } else if (head == "file") {
        sel.kind = Selector::Kind::file;
        auto hash = rest.find('#');
        if (hash == std::string::npos) {
            sel.path = rest;
        } else {
            sel.path = rest.substr(0, hash);
            sel.name = rest.substr(hash + 1);
        }
    } else {
        invz::throw_validation(invz::errc::parse_error, "unknown selector kind '" + head + "'");
    }
    return sel;
}

invz::Matroid load_file_matroid(const Selector& sel) {
    auto entries = invz::parse_catalog(sel.path, &std::cerr);
    if (sel.name.empty()) {
        if (entries.size() != 1)
            invz::throw_validation(invz::errc::parse_error,
                                   sel.path + " holds " + std::to_string(entries.size()) +
                                       " matroids; pick one with file:path#name");
        return entries.front();
    }
    for (auto& m : entries)
        if (m.label() == sel.name) return m;
    invz::throw_validation(invz::errc::parse_error,
                           "no matroid named '" + sel.name + "' in " + sel.path);
}

/// Concrete matroid for a selector (for sparse: first realized family member).
invz::Matroid realize(const Selector& sel, const invz::RunConfig& cfg) {
    switch (sel.kind) {
        case Selector::Kind::uniform: return invz::uniform(sel.k, sel.n);
        case Selector::Kind::boolean_: return invz::boolean_matroid(sel.n);
        case Selector::Kind::file: return load_file_matroid(sel);
        case Selector::Kind::sparse: {
            if (sel.n > cfg.ground_set_limit)
                invz::throw_resource(invz::errc::ground_set_too_large,
                                     "realizing " + sel.text + " needs n <= limit " +
                                         std::to_string(cfg.ground_set_limit));
            auto fam = invz::sparse_paving_family(sel.k, sel.n, sel.lambda,
                                                  invz::FamilyMode::greedy, 1,
                                                  cfg.search_node_budget);
            if (fam.empty())
                invz::throw_validation(invz::errc::validation,
                                       "no sparse paving matroid realizes " + sel.text);
            return fam.front();
        }
    }
    invz::throw_validation(invz::errc::parse_error, "bad selector");
}

json poly_json(const invz::RunConfig& cfg, const Selector& sel, const std::string& which,
               const invz::IntPolynomial& p) {
    json j;
    j["schema_version"] = cfg.schema_version;
    j["selector"] = sel.text;
    j["which"] = which;
    j["degree"] = p.degree();
    j["coefficients"] = p.to_decimal_strings();
    return j;
}

void emit(const json& j, const invz::RunConfig& cfg) {
    if (cfg.output_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(cfg.output_path);
        if (!out)
            invz::throw_validation(invz::errc::validation,
                                   "cannot write '" + cfg.output_path + "'");
        out << j.dump(2) << "\n";
    }
}

int cmd_poly(const invz::RunConfig& cfg, const std::string& selector_text,
             const std::string& which) {
    Selector sel = parse_selector(selector_text);
    invz::Engine eng({cfg.ground_set_limit});

    if (sel.kind == Selector::Kind::sparse) {
        auto profile = invz::SparsePavingProfile::make(sel.k, sel.n, sel.lambda);
        invz::IntPolynomial y = invz::y_sparse_paving(profile);
        if (which == "Y") {
            emit(poly_json(cfg, sel, which, y), cfg);
            return 0;
        }
        if (which == "gamma") {
            auto g = invz::gamma_expansion(y, profile.k);
            json j;
            j["schema_version"] = cfg.schema_version;
            j["selector"] = sel.text;
            j["which"] = which;
            j["center"] = g.center;
            j["coefficients"] = g.to_decimal_strings();
            j["gamma_positive"] = g.is_gamma_positive();
            emit(j, cfg);
            return 0;
        }
        invz::throw_validation(invz::errc::validation,
                               "profile-only selector supports Y and gamma, not " + which);
    }

    const bool is_uniform_sel =
        sel.kind == Selector::Kind::uniform || sel.kind == Selector::Kind::boolean_;
    const bool closed_route = is_uniform_sel && sel.k >= 1 &&
                              (which == "Q" || which == "Z" || which == "Y" || which == "gamma");
    const bool engine_route = !closed_route || sel.n <= cfg.engine_check_limit;

    std::optional<invz::Matroid> m;
    if (engine_route || which == "chi" || which == "tutte" || which == "P") m = realize(sel, cfg);

    if (which == "tutte") {
        invz::BiPolynomial t = eng.tutte(*m);
        json terms = json::array();
        for (const auto& [key, c] : t.terms())
            terms.push_back({{"x", key.first}, {"y", key.second}, {"coeff", invz::to_decimal(c)}});
        json j;
        j["schema_version"] = cfg.schema_version;
        j["selector"] = sel.text;
        j["which"] = which;
        j["terms"] = terms;
        emit(j, cfg);
        return 0;
    }

    invz::IntPolynomial val;
    bool cross_checked = false;
    if (which == "chi") {
        val = eng.characteristic(*m);
    } else if (which == "P") {
        val = eng.kl_p(*m);
    } else if (which == "Q" || which == "Z" || which == "Y" || which == "gamma") {
        if (closed_route) {
            val = which == "Q"   ? invz::q_uniform(sel.k, sel.n)
                  : which == "Z" ? invz::z_uniform(sel.k, sel.n)
                                 : invz::y_uniform(sel.k, sel.n);
            if (engine_route) {
                invz::IntPolynomial other = which == "Q"   ? eng.inverse_kl_q(*m)
                                            : which == "Z" ? eng.z_poly(*m)
                                                           : eng.y_poly(*m);
                if (other != val)
                    invz::throw_internal(invz::errc::internal_check,
                                         "engine and closed form disagree for " + sel.text);
                cross_checked = true;
            }
        } else {
            val = which == "Q"   ? eng.inverse_kl_q(*m)
                  : which == "Z" ? eng.z_poly(*m)
                                 : eng.y_poly(*m);
        }
    } else {
        invz::throw_validation(invz::errc::parse_error,
                               "unknown polynomial '" + which +
                                   "' (expected chi|tutte|P|Q|Z|Y|gamma)");
    }

    if (which == "gamma") {
        int center = m ? invz::remove_loops(*m).rank() : sel.k;
        auto g = invz::gamma_expansion(val, center);
        json j;
        j["schema_version"] = cfg.schema_version;
        j["selector"] = sel.text;
        j["which"] = which;
        j["center"] = g.center;
        j["coefficients"] = g.to_decimal_strings();
        j["gamma_positive"] = g.is_gamma_positive();
        if (cross_checked) j["cross_checked"] = true;
        emit(j, cfg);
        return 0;
    }

    json j = poly_json(cfg, sel, which, val);
    if (which == "Y") {
        int rank = m ? m->rank() : sel.k;
        auto [v, g] = invz::y_verdicts(val, rank);
        j["verdicts"] = {{"y_nonnegative", v.y_nonnegative},
                         {"y_palindromic", v.y_palindromic},
                         {"y_unimodal", v.y_unimodal},
                         {"y_logconcave_no_internal_zeros", v.y_logconcave_no_internal_zeros},
                         {"y_gamma_positive", v.y_gamma_positive}};
    }
    if (cross_checked) j["cross_checked"] = true;
    emit(j, cfg);
    return 0;
}

int cmd_check(const invz::RunConfig& cfg, const std::string& selector_text) {
    Selector sel = parse_selector(selector_text);
    invz::Engine eng({cfg.ground_set_limit});
    invz::Matroid m = realize(sel, cfg);
    invz::PropertyReport r = invz::analyze(eng, m, cfg);
    emit(r.to_json(cfg), cfg);
    return 0;
}

struct Range {
    int lo = 1, hi = 1;
};

Range parse_range(const std::string& text, int default_lo) {
    Range r;
    r.lo = default_lo;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            if (!a.empty()) r.lo = std::stoi(a);
            if (b.empty())
                invz::throw_validation(invz::errc::parse_error,
                                       "range '" + text + "' needs an upper bound");
            r.hi = std::stoi(b);
        }
    } catch (const std::invalid_argument&) {
        invz::throw_validation(invz::errc::parse_error, "bad range '" + text + "'");
    } catch (const std::out_of_range&) {
        invz::throw_validation(invz::errc::parse_error, "bad range '" + text + "'");
    }
    return r;
}

int cmd_scan(invz::RunConfig cfg, bool sparse_paving, const std::string& k_range,
             const std::string& n_range, const std::string& catalog_path) {
    invz::Engine eng({cfg.ground_set_limit});
    invz::ScanSummary summary;
    if (!catalog_path.empty()) {
        auto entries = invz::parse_catalog(catalog_path, &std::cerr);
        summary = invz::scan_catalog(eng, entries, cfg);
    } else if (sparse_paving) {
        Range k = parse_range(k_range, 1);
        Range n = parse_range(n_range, 1);
        cfg.scan_k_min = k.lo;
        cfg.scan_k_max = k.hi;
        cfg.scan_n_min = n.lo;
        cfg.scan_n_max = n.hi;
        summary = invz::scan_sparse_paving(eng, cfg.scan_k_min, cfg.scan_k_max, cfg.scan_n_min,
                                           cfg.scan_n_max, cfg.lambda_policy, cfg);
    } else {
        invz::throw_validation(invz::errc::parse_error,
                               "scan needs --sparse-paving or --catalog");
    }
    emit(summary.to_json(cfg), cfg);
    if (summary.has_counterexamples()) {
        std::cerr << "scan found conjecture counterexamples\n";
        return 1;
    }
    return 0;
}

int cmd_relax(const invz::RunConfig& cfg, const std::string& selector_text,
              const std::string& subset_text) {
    Selector sel = parse_selector(selector_text);
    invz::Matroid m = realize(sel, cfg);
    if (m.size() > cfg.ground_set_limit)
        invz::throw_resource(invz::errc::ground_set_too_large,
                             "relaxation enumerates rank-sized subsets; n=" +
                                 std::to_string(m.size()) + " exceeds limit " +
                                 std::to_string(cfg.ground_set_limit));
    std::vector<int> elems;
    std::stringstream ss(subset_text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            elems.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            invz::throw_validation(invz::errc::parse_error, "bad subset '" + subset_text + "'");
        }
    }
    invz::Mask a = 0;
    for (int e : elems) {
        if (e < 1 || e > m.size())
            invz::throw_validation(invz::errc::validation,
                                   "element " + std::to_string(e) + " outside 1.." +
                                       std::to_string(m.size()));
        a |= invz::bit(e - 1);
    }
    invz::Matroid relaxed = invz::relax(m, a);
    relaxed.set_label(m.label().empty() ? "relaxed" : m.label() + ".relaxed");
    json j = invz::entry_to_json(invz::entry_from_matroid(relaxed));
    j["schema_version"] = cfg.schema_version;
    emit(j, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    invz::RunConfig cfg;
    if (const char* env = std::getenv("INVZ_GROUND_SET_LIMIT")) {
        try {
            cfg.ground_set_limit = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring bad INVZ_GROUND_SET_LIMIT='" << env << "'\n";
        }
    }

    CLI::App app{"exact matroid invariants: Kazhdan-Lusztig family, Z- and inverse Z-polynomials"};
    app.require_subcommand(0, 1);
    bool print_schema = false;
    app.add_flag("--schema-version", print_schema, "print the JSON schema version and exit");
    app.add_option("--ground-set-limit", cfg.ground_set_limit,
                   "refuse exponential enumerations beyond this ground-set size");
    app.add_option("--out", cfg.output_path, "write JSON to this file instead of stdout");
    app.add_flag("--timings", cfg.include_timings, "include timing_ms in reports");

    std::string selector, which, subset, k_range = "1..4", n_range = "1..8", catalog_path;
    bool sparse_flag = false;

    auto* poly = app.add_subcommand("poly", "print one polynomial invariant");
    poly->add_option("selector", selector, "uniform:k,n | boolean:n | sparse:k,n,l | file:path#name")
        ->required();
    poly->add_option("which", which, "chi|tutte|P|Q|Z|Y|gamma")->required();

    auto* check = app.add_subcommand("check", "full property report for one matroid");
    check->add_option("selector", selector)->required();

    auto* scan = app.add_subcommand("scan", "batch property scan");
    scan->add_flag("--sparse-paving", sparse_flag, "sweep sparse paving profiles");
    scan->add_option("--k", k_range, "rank range, e.g. 1..4");
    scan->add_option("--n", n_range, "size range, e.g. ..8");
    std::string policy = "all-feasible";
    scan->add_option("--lambda-policy", policy, "all-feasible | max-only");
    scan->add_option("--catalog", catalog_path, "scan matroids from a file");
    scan->add_option("--budget", cfg.family_budget, "families per (k,n,lambda)");
    scan->add_option("--jobs", cfg.parallelism, "worker threads for catalog scans");

    auto* relax = app.add_subcommand("relax", "relax a stressed subset");
    relax->add_option("selector", selector)->required();
    relax->add_option("--subset", subset, "1-based elements, comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.validate();
        if (print_schema && app.get_subcommands().empty()) {
            std::cout << cfg.schema_version << "\n";
            return 0;
        }
        if (poly->parsed()) return cmd_poly(cfg, selector, which);
        if (check->parsed()) return cmd_check(cfg, selector);
        if (scan->parsed()) {
            if (policy == "all-feasible")
                cfg.lambda_policy = invz::LambdaPolicy::all_feasible;
            else if (policy == "max-only")
                cfg.lambda_policy = invz::LambdaPolicy::max_only;
            else
                invz::throw_validation(invz::errc::parse_error,
                                       "bad --lambda-policy '" + policy + "'");
            return cmd_scan(cfg, sparse_flag, k_range, n_range, catalog_path);
        }
        if (relax->parsed()) return cmd_relax(cfg, selector, subset);
        std::cerr << app.help();
        return 2;
    } catch (const invz::InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 4;
    } catch (const invz::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const invz::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}
