#pragma once

/*
  Engine for the Kazhdan-Lusztig family of matroid invariants.

  Everything is driven by one recursion scheme over the lattice of flats. For
  a loopless matroid M with lattice L(M):

    chi_M(t)   = sum_F mu(0,F) t^(rk M - rk F),  cross-checked against
                 (-1)^rk T_M(1-t, 0) on every computation (RouteMismatch on
                 disagreement);
    P_M(t)     = the unique polynomial with P = 1 in rank 0, deg P < rk/2,
                 and t^rk P(1/t) = sum_F chi_{M|F} P_{M/F}. The right side is
                 assembled from proper flats, the low half of P is read off
                 its high coefficients, and the defining identity is
                 re-verified exactly (InconsistentRecursion on failure);
    Z_M(t)     = sum_F t^(rk F) P_{M/F};
    Yhat_M(t)  = the convolution inverse of Z: Yhat = 1 in rank 0 and
                 sum_F Z_{M|F} Yhat_{M/F} = 0 otherwise, solved for the
                 bottom term;
    Y_M(t)     = (-1)^rk Yhat_M(t), computed after deleting loops;
    Q_M(t)     = obtained by solving
                 Yhat_M = sum_F (-1)^(rk F) Q_{M|F} t^(rk M/F) mu_{M/F}
                 for the top term; non-negativity and the deg < rk/2 bound
                 are asserted on every Q (hard errors, never ignored).

  Results are memoized in a table keyed by the canonical loopless basis
  encoding, so the exponentially-often repeated minors of the recursion are
  computed once. Contractions reuse the parent lattice: the flats of M/F are
  the flats of M above F, so their lattice is spliced out of the parent
  instead of being re-enumerated (interval_lattice). The cache behaves as a
  single-writer-per-key table with idempotent writes; concurrent use is safe.
*/

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invz/arith.hpp"
#include "invz/errors.hpp"
#include "invz/flats.hpp"
#include "invz/matroid.hpp"
#include "invz/polynomial.hpp"

namespace invz {

struct EngineLimits {
    int ground_set_limit = kDefaultGroundSetLimit;
};

class Engine {
public:
    explicit Engine(EngineLimits limits = {}) : limits_(limits) {}

    /// Tutte polynomial by direct summation over all subsets of the raw
    /// ground set (loops are NOT stripped here; they feed the y-variable).
    BiPolynomial tutte(const Matroid& m) const {
        if (m.size() > limits_.ground_set_limit)
            throw_resource(errc::ground_set_too_large,
                           "tutte refused for n=" + std::to_string(m.size()) + " > limit " +
                               std::to_string(limits_.ground_set_limit));
        const int r = m.rank();
        const int n = m.size();
        std::vector<std::vector<unsigned long>> count(
            static_cast<std::size_t>(r) + 1,
            std::vector<unsigned long>(static_cast<std::size_t>(n - r) + 1, 0));
        const Mask end = full_mask(n);
        Mask s = 0;
        while (true) {
            int ra = rank_of(m, s);
            ++count[static_cast<std::size_t>(r - ra)][static_cast<std::size_t>(popcount(s) - ra)];
            if (s == end) break;
            ++s;
        }
        BiPolynomial t;
        for (int a = 0; a <= r; ++a)
            for (int b = 0; b <= n - r; ++b) {
                if (count[a][b] == 0) continue;
                BigInt cnt(count[a][b]);
                for (int i = 0; i <= a; ++i)
                    for (int j = 0; j <= b; ++j) {
                        BigInt c = binomial(a, i) * binomial(b, j) * cnt;
                        if ((a - i + b - j) % 2 != 0) c = -c;
                        t.add(i, j, c);
                    }
            }
        return t;
    }

    BigInt mobius_invariant(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return mobius_of(n);
    }

    IntPolynomial characteristic(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return chi_of(n);
    }

    IntPolynomial kl_p(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return p_of(n);
    }

    IntPolynomial z_poly(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return z_of(n);
    }

    IntPolynomial y_hat(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return yhat_of(n);
    }

    IntPolynomial y_poly(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        IntPolynomial yh = yhat_of(n);
        return (n->matroid.rank() % 2 == 0) ? yh : -yh;
    }

    IntPolynomial inverse_kl_q(const Matroid& m) {
        NodePtr n = node_for(remove_loops(m));
        return q_of(n);
    }

    std::size_t cache_size() const {
        std::lock_guard<std::mutex> g(mutex_);
        return cache_.size();
    }

    int ground_set_limit() const { return limits_.ground_set_limit; }

private:
    struct LatticeData {
        FlatLattice lat;
        std::vector<BigInt> mobius;  // mu(bottom, F) per flat index
        LatticeData(FlatLattice l) : lat(std::move(l)), mobius(lat.mobius_from_bottom()) {}
    };

    struct Node {
        Matroid matroid;  // loopless
        std::shared_ptr<const LatticeData> lattice;
        std::optional<BigInt> mu;
        std::optional<IntPolynomial> chi, p, z, yhat, q;
    };
    using NodePtr = std::shared_ptr<Node>;

    NodePtr node_for(const Matroid& loopless) {
        if (loops(loopless) != 0)
            throw_internal(errc::has_loops, "engine node requires a loopless matroid");
        std::string key = canonical_key(loopless);
        std::lock_guard<std::mutex> g(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto n = std::make_shared<Node>();
        n->matroid = loopless;
        cache_.emplace(std::move(key), n);
        return n;
    }

    std::shared_ptr<const LatticeData> lattice_of(const NodePtr& n) {
        {
            std::lock_guard<std::mutex> g(mutex_);
            if (n->lattice) return n->lattice;
        }
        auto ld = std::make_shared<const LatticeData>(flats(n->matroid, limits_.ground_set_limit));
        std::lock_guard<std::mutex> g(mutex_);
        if (!n->lattice) n->lattice = ld;
        return n->lattice;
    }

    /// Contraction by the flat at index i, with the contraction's lattice
    /// spliced out of the parent's interval [F, E] instead of re-enumerated.
    NodePtr contract_at(const std::shared_ptr<const LatticeData>& ld, int i) {
        Matroid c = interval_contraction(ld->lat, i);
        NodePtr cn = node_for(c);
        bool need = false;
        {
            std::lock_guard<std::mutex> g(mutex_);
            need = !cn->lattice;
        }
        if (need) {
            auto sub = std::make_shared<const LatticeData>(interval_lattice(ld->lat, i));
            std::lock_guard<std::mutex> g(mutex_);
            if (!cn->lattice) cn->lattice = sub;
        }
        return cn;
    }

    NodePtr restrict_at(const std::shared_ptr<const LatticeData>& ld, int i) {
        return node_for(restriction_to_flat(ld->lat, i));
    }

    template <typename T>
    bool cached(const NodePtr& n, std::optional<T> Node::* field, T& out) const {
        std::lock_guard<std::mutex> g(mutex_);
        const std::optional<T>& slot = (*n).*field;
        if (slot.has_value()) {
            out = *slot;
            return true;
        }
        return false;
    }

    template <typename T>
    T store(const NodePtr& n, std::optional<T> Node::* field, T value) {
        std::lock_guard<std::mutex> g(mutex_);
        std::optional<T>& slot = (*n).*field;
        if (!slot.has_value()) slot = std::move(value);  // idempotent
        return *slot;
    }

    BigInt mobius_of(const NodePtr& n) {
        BigInt out;
        if (cached(n, &Node::mu, out)) return out;
        auto ld = lattice_of(n);
        return store(n, &Node::mu, ld->mobius.back());
    }

    IntPolynomial chi_of(const NodePtr& n) {
        IntPolynomial out;
        if (cached(n, &Node::chi, out)) return out;
        auto ld = lattice_of(n);
        const int r = n->matroid.rank();
        IntPolynomial by_flats;
        for (int i = 0; i < ld->lat.size(); ++i)
            by_flats += IntPolynomial::constant(ld->mobius[static_cast<std::size_t>(i)])
                            .shifted(r - ld->lat.flat_rank(i));
        // Independent route: chi = (-1)^rk T(1-t, 0).
        IntPolynomial one_minus_t(std::vector<BigInt>{BigInt(1), BigInt(-1)});
        IntPolynomial by_tutte = tutte(n->matroid).substitute_x_y0(one_minus_t);
        if (r % 2 != 0) by_tutte = -by_tutte;
        if (by_flats != by_tutte)
            throw_internal(errc::route_mismatch,
                           "characteristic polynomial routes disagree for " +
                               canonical_key(n->matroid));
        return store(n, &Node::chi, std::move(by_flats));
    }

    IntPolynomial p_of(const NodePtr& n) {
        IntPolynomial out;
        if (cached(n, &Node::p, out)) return out;
        const int r = n->matroid.rank();
        if (r == 0) return store(n, &Node::p, IntPolynomial::one());
        auto ld = lattice_of(n);
        IntPolynomial rhs;  // sum over proper (non-bottom) flats
        for (int i = 1; i < ld->lat.size(); ++i)
            rhs += chi_of(restrict_at(ld, i)) * p_of(contract_at(ld, i));
        std::vector<BigInt> low;
        for (int i = 0; i <= (r - 1) / 2; ++i) low.push_back(rhs.coeff(r - i));
        IntPolynomial p(std::move(low));
        if (reverse(p, r) != p + rhs)
            throw_internal(errc::inconsistent_recursion,
                           "KL defining identity unsolvable for " + canonical_key(n->matroid));
        return store(n, &Node::p, std::move(p));
    }

    IntPolynomial z_of(const NodePtr& n) {
        IntPolynomial out;
        if (cached(n, &Node::z, out)) return out;
        auto ld = lattice_of(n);
        IntPolynomial z;
        for (int i = 0; i < ld->lat.size(); ++i)
            z += p_of(contract_at(ld, i)).shifted(ld->lat.flat_rank(i));
        return store(n, &Node::z, std::move(z));
    }

    IntPolynomial yhat_of(const NodePtr& n) {
        IntPolynomial out;
        if (cached(n, &Node::yhat, out)) return out;
        if (n->matroid.rank() == 0) return store(n, &Node::yhat, IntPolynomial::one());
        auto ld = lattice_of(n);
        IntPolynomial acc;
        for (int i = 1; i < ld->lat.size(); ++i)
            acc += z_of(restrict_at(ld, i)) * yhat_of(contract_at(ld, i));
        return store(n, &Node::yhat, -acc);
    }

    IntPolynomial q_of(const NodePtr& n) {
        IntPolynomial out;
        if (cached(n, &Node::q, out)) return out;
        const int r = n->matroid.rank();
        if (r == 0) return store(n, &Node::q, IntPolynomial::one());
        auto ld = lattice_of(n);
        IntPolynomial acc = yhat_of(n);
        for (int i = 0; i + 1 < ld->lat.size(); ++i) {  // all proper (non-top) flats
            const int rf = ld->lat.flat_rank(i);
            BigInt factor = mobius_of(contract_at(ld, i));
            if (rf % 2 != 0) factor = -factor;
            acc -= (factor * q_of(restrict_at(ld, i))).shifted(r - rf);
        }
        IntPolynomial q = (r % 2 == 0) ? acc : -acc;
        if (!is_nonnegative(q))
            throw_internal(errc::nonnegativity_violation,
                           "inverse KL polynomial has a negative coefficient for " +
                               canonical_key(n->matroid));
        if (q.degree() > (r - 1) / 2)
            throw_internal(errc::degree_bound_violation,
                           "inverse KL polynomial degree exceeds rk/2 for " +
                               canonical_key(n->matroid));
        return store(n, &Node::q, std::move(q));
    }

    EngineLimits limits_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, NodePtr> cache_;
};

}  // namespace invz
