#pragma once

// Matroids represented by their bases as bit-masks over a ground set
// {0..n-1}. Construction validates the basis-exchange axiom eagerly, so every
// Matroid in circulation is legal and downstream recursions never re-check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invz/arith.hpp"
#include "invz/errors.hpp"

namespace invz {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 63;
inline constexpr int kDefaultGroundSetLimit = 20;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int e) { return Mask(1) << e; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1); }

inline Mask mask_of(const std::vector<int>& elements) {
    Mask m = 0;
    for (int e : elements) m |= bit(e);
    return m;
}

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    while (m) {
        int e = std::countr_zero(m);
        out.push_back(e);
        m &= m - 1;
    }
    return out;
}

inline std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

/// Keep only the positions selected by `keep`, renumbering them densely from 0.
inline Mask compress(Mask m, Mask keep) {
    Mask out = 0;
    int pos = 0;
    while (keep) {
        Mask b = keep & (~keep + 1);
        if (m & b) out |= bit(pos);
        ++pos;
        keep &= keep - 1;
    }
    return out;
}

/// Visit all size-k subsets of {0..n-1} in increasing mask order.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(Mask(0));
        return;
    }
    Mask v = (Mask(1) << k) - 1;
    const Mask limit = Mask(1) << n;
    while (v < limit) {
        fn(v);
        Mask c = v & (~v + 1);  // Gosper's hack: next subset of the same size
        Mask r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

inline std::vector<Mask> subsets_of_size(int n, int k) {
    std::vector<Mask> out;
    for_each_subset_of_size(n, k, [&](Mask m) { out.push_back(m); });
    return out;
}

class Matroid {
public:
    Matroid() = default;

    int size() const { return n_; }
    int rank() const { return rank_; }
    Mask ground_mask() const { return full_mask(n_); }
    const std::vector<Mask>& bases() const { return bases_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool has_basis(Mask m) const {
        return std::binary_search(bases_.begin(), bases_.end(), m);
    }

    friend Matroid from_bases(int, std::vector<Mask>, std::string);
    friend Matroid uniform(int, int);

private:
    // Trusted constructor: callers guarantee bases is sorted, unique and a
    // legal basis family.
    Matroid(int n, int rank, std::vector<Mask> bases, std::string label)
        : n_(n), rank_(rank), bases_(std::move(bases)), label_(std::move(label)) {}

    int n_ = 0;
    int rank_ = 0;
    std::vector<Mask> bases_{Mask(0)};
    std::string label_;
};

/// Validating constructor: checks cardinalities and the basis-exchange axiom,
/// reporting a witnessing pair on failure. Bases are deduplicated and sorted.
inline Matroid from_bases(int n, std::vector<Mask> bases, std::string label = "") {
    if (n < 0 || n > kMaxGroundSet)
        throw_resource(errc::ground_set_too_large,
                       "ground set size " + std::to_string(n) + " outside [0," +
                           std::to_string(kMaxGroundSet) + "]");
    if (bases.empty()) throw_validation(errc::empty_bases, "a matroid needs at least one basis");

    const Mask ground = full_mask(n);
    const int rank = popcount(bases.front());
    for (Mask b : bases) {
        if (b & ~ground)
            throw_validation(errc::invalid_subset,
                             "basis " + mask_to_string(b) + " leaves the ground set of size " +
                                 std::to_string(n));
        if (popcount(b) != rank)
            throw_validation(errc::mixed_cardinality,
                             "bases " + mask_to_string(bases.front()) + " and " +
                                 mask_to_string(b) + " have different sizes");
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    auto is_basis = [&](Mask m) {
        return std::binary_search(bases.begin(), bases.end(), m);
    };
    for (Mask a : bases) {
        for (Mask b : bases) {
            if (a == b) continue;
            Mask only_a = a & ~b;
            while (only_a) {
                Mask ea = only_a & (~only_a + 1);
                only_a &= only_a - 1;
                bool exchanged = false;
                Mask only_b = b & ~a;
                while (only_b) {
                    Mask eb = only_b & (~only_b + 1);
                    only_b &= only_b - 1;
                    if (is_basis((a & ~ea) | eb)) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged)
                    throw_validation(errc::exchange_axiom_violation,
                                     "bases " + mask_to_string(a) + " and " + mask_to_string(b) +
                                         ": element " + std::to_string(std::countr_zero(ea)) +
                                         " admits no exchange");
            }
        }
    }
    return Matroid(n, rank, std::move(bases), std::move(label));
}

inline Matroid from_bases(int n, const std::vector<std::vector<int>>& bases,
                          std::string label = "") {
    std::vector<Mask> ms;
    ms.reserve(bases.size());
    for (const auto& b : bases) {
        for (int e : b)
            if (e < 0 || e >= n)
                throw_validation(errc::invalid_subset,
                                 "element " + std::to_string(e) + " outside 0.." +
                                     std::to_string(n - 1));
        ms.push_back(mask_of(b));
    }
    return from_bases(n, std::move(ms), std::move(label));
}

/// rk(S) = max over bases B of |S n B|.
inline int rank_of(const Matroid& m, Mask s) {
    if (s & ~m.ground_mask())
        throw_validation(errc::invalid_subset, "subset leaves the ground set");
    int best = 0;
    const int cap = std::min(popcount(s), m.rank());
    for (Mask b : m.bases()) {
        best = std::max(best, popcount(s & b));
        if (best == cap) break;
    }
    return best;
}

inline bool is_independent(const Matroid& m, Mask s) { return rank_of(m, s) == popcount(s); }

/// Unique maximal superset of S with the same rank; idempotent.
inline Mask closure(const Matroid& m, Mask s) {
    const int r = rank_of(m, s);
    Mask out = s;
    Mask rest = m.ground_mask() & ~s;
    while (rest) {
        Mask e = rest & (~rest + 1);
        rest &= rest - 1;
        if (rank_of(m, s | e) == r) out |= e;
    }
    return out;
}

inline Mask loops(const Matroid& m) { return closure(m, 0); }

inline Matroid restriction(const Matroid& m, Mask s) {
    const int r = rank_of(m, s);
    std::vector<Mask> bs;
    for (Mask b : m.bases())
        if (popcount(b & s) == r) bs.push_back(compress(b & s, s));
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    return from_bases(popcount(s), std::move(bs));
}

inline Matroid contraction(const Matroid& m, Mask s) {
    const int r = rank_of(m, s);
    const Mask rest = m.ground_mask() & ~s;
    std::vector<Mask> bs;
    for (Mask b : m.bases())
        if (popcount(b & s) == r) bs.push_back(compress(b & rest, rest));
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    return from_bases(popcount(rest), std::move(bs));
}

inline Matroid deletion(const Matroid& m, Mask s) {
    return restriction(m, m.ground_mask() & ~s);
}

/// Bases of the dual are the complements of bases.
inline Matroid dual(const Matroid& m) {
    std::vector<Mask> bs;
    bs.reserve(m.bases().size());
    for (Mask b : m.bases()) bs.push_back(m.ground_mask() & ~b);
    std::sort(bs.begin(), bs.end());
    return from_bases(m.size(), std::move(bs));
}

inline Matroid remove_loops(const Matroid& m) {
    Mask l = loops(m);
    if (l == 0) return m;
    return deletion(m, l);
}

/// Delete loops, then keep one representative per parallel class (rank-1 flat).
inline Matroid simplify(const Matroid& m) {
    Matroid base = remove_loops(m);
    Mask keep = 0, seen = 0;
    for (int e = 0; e < base.size(); ++e) {
        if (seen & bit(e)) continue;
        Mask cls = closure(base, bit(e));
        seen |= cls;
        keep |= bit(e);
    }
    return restriction(base, keep);
}

/// Ground sets are made disjoint by shifting the second matroid's elements.
inline Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
    std::vector<Mask> bs;
    bs.reserve(m1.bases().size() * m2.bases().size());
    for (Mask b1 : m1.bases())
        for (Mask b2 : m2.bases()) bs.push_back(b1 | (b2 << m1.size()));
    std::string label;
    if (!m1.label().empty() && !m2.label().empty()) label = m1.label() + "+" + m2.label();
    return from_bases(m1.size() + m2.size(), std::move(bs), std::move(label));
}

/// U_{k,n}: every k-subset is a basis. Valid by construction, so the exchange
/// check is skipped; the validator is exercised against this fast path in the
/// test suite.
inline Matroid uniform(int k, int n) {
    if (n < 0 || k < 0 || k > n)
        throw_validation(errc::invalid_rank,
                         "uniform(" + std::to_string(k) + "," + std::to_string(n) + ")");
    if (n > kMaxGroundSet)
        throw_resource(errc::ground_set_too_large, "ground set size " + std::to_string(n));
    if (binomial(n, k) > BigInt(20'000'000))
        throw_resource(errc::ground_set_too_large,
                       "uniform(" + std::to_string(k) + "," + std::to_string(n) +
                           ") has too many bases to enumerate");
    std::vector<Mask> bs = subsets_of_size(n, k);
    std::string label = "U(" + std::to_string(k) + "," + std::to_string(n) + ")";
    return Matroid(n, k, std::move(bs), std::move(label));
}

inline Matroid boolean_matroid(int n) {
    Matroid m = uniform(n, n);
    m.set_label("B(" + std::to_string(n) + ")");
    return m;
}

inline bool is_uniform(const Matroid& m) {
    return BigInt(static_cast<unsigned long>(m.bases().size())) == binomial(m.size(), m.rank());
}

/// Paving: every subset of size rk(M)-1 is independent.
inline bool is_paving(const Matroid& m) {
    if (m.rank() <= 1) return true;
    bool ok = true;
    for_each_subset_of_size(m.size(), m.rank() - 1, [&](Mask s) {
        if (ok && rank_of(m, s) != m.rank() - 1) ok = false;
    });
    return ok;
}

inline bool is_sparse_paving(const Matroid& m) { return is_paving(m) && is_paving(dual(m)); }

/// Flats of rank rk(M)-1 that are also circuits. Such a set necessarily has
/// size rk(M), so only rank-sized subsets are candidates.
inline std::vector<Mask> circuit_hyperplanes(const Matroid& m) {
    std::vector<Mask> out;
    const int k = m.rank();
    if (k == 0) return out;
    for_each_subset_of_size(m.size(), k, [&](Mask s) {
        if (rank_of(m, s) != k - 1) return;  // must be dependent of corank 1
        if (closure(m, s) != s) return;      // must be a flat
        Mask rest = s;
        while (rest) {  // minimality: every proper subset independent
            Mask e = rest & (~rest + 1);
            rest &= rest - 1;
            if (!is_independent(m, s & ~e)) return;
        }
        out.push_back(s);
    });
    return out;
}

/// Stable identity: ground-set size, rank and the sorted basis list. Two
/// matroids with equal keys are equal as labelled matroids.
inline std::string canonical_key(const Matroid& m) {
    std::ostringstream os;
    os << m.size() << ":" << m.rank() << ":" << std::hex;
    bool first = true;
    for (Mask b : m.bases()) {
        if (!first) os << ".";
        os << b;
        first = false;
    }
    return os.str();
}

}  // namespace invz
