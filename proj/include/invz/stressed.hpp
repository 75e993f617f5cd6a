#pragma once

// Stressed subsets and their relaxation. A subset A is stressed when both
// M|A and M/A are uniform; adjoining its cusp (the rank-sized subsets that
// over-meet A) to the bases yields a new matroid. Circuit-hyperplane
// relaxation is the special case rk(A) = rk(M)-1, |A| = rk(M). The same file
// hosts the cuspidal-matroid construction and the generator for sparse paving
// matroids used by scans.

#include <algorithm>
#include <string>
#include <vector>

#include "invz/arith.hpp"
#include "invz/errors.hpp"
#include "invz/matroid.hpp"

namespace invz {

struct StressedSubset {
    Mask mask = 0;
    int subset_rank = 0;   // r = rk(A)
    int subset_size = 0;   // h = |A|
    bool cusp_nonempty = false;
};

/// Uniformity of both minors, tested directly: a minor N is uniform iff every
/// rk(N)-subset of its ground set is a basis, i.e. the basis count is full.
inline bool is_stressed(const Matroid& m, Mask a) {
    if (a & ~m.ground_mask())
        throw_validation(errc::invalid_subset, "subset leaves the ground set");
    return is_uniform(restriction(m, a)) && is_uniform(contraction(m, a));
}

/// cusp(A) = { S in (E choose rk(M)) : |S n A| >= rk(A) + 1 }. Requires A
/// stressed.
inline std::vector<Mask> cusp(const Matroid& m, Mask a) {
    if (!is_stressed(m, a))
        throw_validation(errc::not_stressed, "subset " + mask_to_string(a) + " is not stressed");
    const int r = rank_of(m, a);
    std::vector<Mask> out;
    for_each_subset_of_size(m.size(), m.rank(), [&](Mask s) {
        if (popcount(s & a) >= r + 1) out.push_back(s);
    });
    return out;
}

/// Rel(M, A): bases of M together with the cusp of A. Validated on return.
inline Matroid relax(const Matroid& m, Mask a) {
    std::vector<Mask> bs = cusp(m, a);  // throws NotStressed
    bs.insert(bs.end(), m.bases().begin(), m.bases().end());
    return from_bases(m.size(), std::move(bs));
}

/// All stressed subsets with (r, h) annotations. Exponential in n; guarded
/// like flat enumeration.
inline std::vector<StressedSubset> stressed_subsets(const Matroid& m,
                                                    int ground_set_limit = kDefaultGroundSetLimit) {
    if (m.size() > ground_set_limit)
        throw_resource(errc::ground_set_too_large,
                       "stressed-subset enumeration refused for n=" + std::to_string(m.size()) +
                           " > limit " + std::to_string(ground_set_limit));
    std::vector<StressedSubset> out;
    const Mask ground = m.ground_mask();
    for (Mask a = 0;; ++a) {
        if (is_stressed(m, a)) {
            StressedSubset s;
            s.mask = a;
            s.subset_rank = rank_of(m, a);
            s.subset_size = popcount(a);
            bool nonempty = false;
            for_each_subset_of_size(m.size(), m.rank(), [&](Mask t) {
                if (!nonempty && popcount(t & a) >= s.subset_rank + 1) nonempty = true;
            });
            s.cusp_nonempty = nonempty;
            out.push_back(s);
        }
        if (a == ground) break;
    }
    return out;
}

/// The cuspidal matroid: relax U_{k-r,n-h} (+) U_{r,h} at the ground set of
/// the second summand. Requires 0 <= r <= h and 0 <= k-r <= n-h.
inline Matroid cuspidal_matroid(int r, int k, int h, int n) {
    if (!(0 <= r && r <= h && 0 <= k - r && k - r <= n - h && h <= n))
        throw_validation(errc::invalid_cuspidal_parameters,
                         "cuspidal(r=" + std::to_string(r) + ",k=" + std::to_string(k) +
                             ",h=" + std::to_string(h) + ",n=" + std::to_string(n) + ")");
    Matroid sum = direct_sum(uniform(k - r, n - h), uniform(r, h));
    Mask second = full_mask(n) & ~full_mask(n - h);
    Matroid out = relax(sum, second);
    out.set_label("Cusp(" + std::to_string(r) + "," + std::to_string(k) + "," +
                  std::to_string(h) + "," + std::to_string(n) + ")");
    return out;
}

/// Largest lambda a sparse paving matroid of rank k on n elements can have:
/// floor of C(n,k) * min(1/(k+1), 1/(n-k+1)).
inline BigInt sparse_paving_lambda_max(int k, int n) {
    long denom = std::max(k + 1, n - k + 1);
    return binomial(n, k) / BigInt(denom);
}

enum class FamilyMode { all, greedy };

namespace detail {

// Two removed k-sets sharing k-1 elements break the exchange axiom; prune
// such pairs before attempting full validation.
inline bool compatible(Mask a, Mask b, int k) { return popcount(a & b) <= k - 2; }

struct FamilySearch {
    int k, n;
    long lambda;
    std::size_t family_budget;
    std::size_t node_budget;
    const std::vector<Mask>& candidates;
    std::vector<Mask> chosen;
    std::vector<std::vector<Mask>> found;
    std::size_t nodes = 0;

    bool full() const { return found.size() >= family_budget; }

    void dfs(std::size_t start) {
        if (full() || nodes >= node_budget) return;
        ++nodes;
        if (static_cast<long>(chosen.size()) == lambda) {
            found.push_back(chosen);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (candidates.size() - i < static_cast<std::size_t>(lambda) - chosen.size()) break;
            Mask c = candidates[i];
            bool ok = true;
            for (Mask prev : chosen)
                if (!compatible(prev, c, k)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(c);
            dfs(i + 1);
            chosen.pop_back();
            if (full() || nodes >= node_budget) return;
        }
    }
};

}  // namespace detail

/// Matroids obtained from U_{k,n} by removing lambda bases. Every candidate
/// family is re-validated through from_bases and the sparse-paving test; the
/// pairwise-intersection prune is only an optimization. mode::all enumerates
/// families in lexicographic order up to `family_budget`; mode::greedy stops
/// at the first one. Lambda beyond the feasibility bound is an error; an
/// empty result for feasible lambda means the (budgeted) search found none.
inline std::vector<Matroid> sparse_paving_family(int k, int n, const BigInt& lambda,
                                                 FamilyMode mode,
                                                 std::size_t family_budget = 64,
                                                 std::size_t node_budget = 4'000'000) {
    if (!(1 <= k && k <= n - 1))
        throw_validation(errc::invalid_rank, "sparse_paving_family requires 1 <= k <= n-1");
    if (lambda < 0) throw_validation(errc::validation, "negative lambda");
    if (lambda > sparse_paving_lambda_max(k, n))
        throw_validation(errc::infeasible_lambda,
                         "lambda " + to_decimal(lambda) + " exceeds bound " +
                             to_decimal(sparse_paving_lambda_max(k, n)) + " for (k=" +
                             std::to_string(k) + ", n=" + std::to_string(n) + ")");
    const long lam = static_cast<long>(lambda.get_si());
    const std::vector<Mask> candidates = subsets_of_size(n, k);

    detail::FamilySearch search{k, n, lam,
                                mode == FamilyMode::greedy ? std::size_t(1) : family_budget,
                                node_budget, candidates, {}, {}, 0};
    search.dfs(0);

    std::vector<Matroid> out;
    for (const auto& removed : search.found) {
        std::vector<Mask> bs;
        bs.reserve(candidates.size() - removed.size());
        for (Mask c : candidates)
            if (!std::binary_search(removed.begin(), removed.end(), c)) bs.push_back(c);
        Matroid m = from_bases(n, std::move(bs));  // full validation
        if (!is_sparse_paving(m)) continue;
        std::string label = "U(" + std::to_string(k) + "," + std::to_string(n) + ")-" +
                            std::to_string(removed.size()) + "ch";
        m.set_label(label);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace invz
