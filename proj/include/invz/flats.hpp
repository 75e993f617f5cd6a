#pragma once

// The lattice of flats. Flats are enumerated by closing upward from the
// closure of the empty set: every cover of a flat F is the closure of
// F + {e}, so a breadth-first sweep reaches every closed set. The lattice is
// stored sorted by (rank, mask); the bottom (loop set) is index 0 and the top
// (full ground set) is the last index.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invz/arith.hpp"
#include "invz/errors.hpp"
#include "invz/matroid.hpp"

namespace invz {

class FlatLattice {
public:
    int size() const { return static_cast<int>(flats_.size()); }
    Mask flat_mask(int i) const { return flats_[static_cast<std::size_t>(i)].first; }
    int flat_rank(int i) const { return flats_[static_cast<std::size_t>(i)].second; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const Matroid& matroid() const { return m_; }
    const std::vector<std::pair<Mask, int>>& flats() const { return flats_; }

    /// Index of a mask, or -1 if it is not a flat.
    int index_of(Mask f) const {
        auto it = index_.find(f);
        return it == index_.end() ? -1 : it->second;
    }

    bool leq(int i, int j) const {
        return (flat_mask(i) & ~flat_mask(j)) == 0;
    }

    /// Meet = intersection; the intersection of two flats is again a flat.
    int meet(int i, int j) const {
        int r = index_of(flat_mask(i) & flat_mask(j));
        if (r < 0)
            throw_internal(errc::internal_check, "intersection of flats is not a flat");
        return r;
    }

    /// Mobius function mu(bottom, F) for every flat F, by the defining
    /// recursion mu(bottom, bottom) = 1, sum over [bottom, F] = 0.
    std::vector<BigInt> mobius_from_bottom() const {
        std::vector<BigInt> mu(flats_.size());
        for (std::size_t i = 0; i < flats_.size(); ++i) {
            if (i == 0) {
                mu[i] = 1;
                continue;
            }
            BigInt acc(0);
            for (std::size_t j = 0; j < i; ++j)
                if ((flats_[j].first & ~flats_[i].first) == 0) acc += mu[j];
            mu[i] = -acc;
        }
        return mu;
    }

    friend FlatLattice flats(const Matroid&, int);
    friend FlatLattice interval_lattice(const FlatLattice&, int);

private:
    FlatLattice(Matroid m, std::vector<std::pair<Mask, int>> fl) : m_(std::move(m)), flats_(std::move(fl)) {
        std::sort(flats_.begin(), flats_.end(),
                  [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second < b.second : a.first < b.first;
                  });
        index_.reserve(flats_.size());
        for (std::size_t i = 0; i < flats_.size(); ++i) index_[flats_[i].first] = static_cast<int>(i);
        bottom_ = 0;                                  // unique flat of minimal rank
        top_ = static_cast<int>(flats_.size()) - 1;   // unique flat of full rank
    }

    Matroid m_;
    std::vector<std::pair<Mask, int>> flats_;
    std::unordered_map<Mask, int> index_;
    int bottom_ = 0;
    int top_ = 0;
};

/// Enumerate every flat of m with its rank. Guarded: refuses ground sets
/// larger than `ground_set_limit` since the lattice can be exponential.
inline FlatLattice flats(const Matroid& m, int ground_set_limit = kDefaultGroundSetLimit) {
    if (m.size() > ground_set_limit)
        throw_resource(errc::ground_set_too_large,
                       "flat enumeration refused for n=" + std::to_string(m.size()) +
                           " > limit " + std::to_string(ground_set_limit));
    std::vector<std::pair<Mask, int>> fl;
    std::unordered_map<Mask, int> seen;
    std::vector<Mask> stack;
    Mask bottom = closure(m, 0);
    seen.emplace(bottom, 0);
    stack.push_back(bottom);
    fl.emplace_back(bottom, rank_of(m, bottom));
    while (!stack.empty()) {
        Mask f = stack.back();
        stack.pop_back();
        Mask rest = m.ground_mask() & ~f;
        while (rest) {
            Mask e = rest & (~rest + 1);
            rest &= rest - 1;
            Mask g = closure(m, f | e);
            if (seen.emplace(g, 0).second) {
                stack.push_back(g);
                fl.emplace_back(g, rank_of(m, g));
            }
        }
    }
    return FlatLattice(m, std::move(fl));
}

/// Restriction of the underlying matroid to the flat with index i.
inline Matroid restriction_to_flat(const FlatLattice& lat, int i) {
    return restriction(lat.matroid(), lat.flat_mask(i));
}

/// Contraction M/F for a flat F. The lattice of the contraction is
/// order-isomorphic to the interval [F, E] of `lat`; see interval_lattice.
inline Matroid interval_contraction(const FlatLattice& lat, int f) {
    return contraction(lat.matroid(), lat.flat_mask(f));
}

/// Build the lattice of M/F directly from the interval [F, E]: flats of the
/// contraction are exactly the flats of M containing F, with masks compressed
/// to the contracted ground set and ranks shifted down by rk(F).
inline FlatLattice interval_lattice(const FlatLattice& lat, int f) {
    const Mask fm = lat.flat_mask(f);
    const int fr = lat.flat_rank(f);
    const Mask rest = lat.matroid().ground_mask() & ~fm;
    Matroid contracted = interval_contraction(lat, f);
    std::vector<std::pair<Mask, int>> fl;
    for (int i = 0; i < lat.size(); ++i) {
        if ((fm & ~lat.flat_mask(i)) != 0) continue;  // keep only flats above F
        fl.emplace_back(compress(lat.flat_mask(i) & rest, rest), lat.flat_rank(i) - fr);
    }
    return FlatLattice(std::move(contracted), std::move(fl));
}

}  // namespace invz
