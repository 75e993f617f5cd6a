#include <doctest.h>

#include <random>

#include "invz/invz.hpp"
#include "test_support.hpp"

// Standalone matroid-axiom suite: exhaustive checks at n <= 6 and a stream
// of randomized instances built from validated constructions. The exchange
// oracle below is written directly from the axiom, independent of the
// validator inside from_bases.

using namespace invz;

namespace {

bool exchange_axiom_holds(int n, const std::vector<Mask>& bases) {
    auto is_basis = [&](Mask m) {
        return std::find(bases.begin(), bases.end(), m) != bases.end();
    };
    (void)n;
    for (Mask a : bases)
        for (Mask b : bases) {
            if (a == b) continue;
            for (int ea : elements_of(a & ~b)) {
                bool ok = false;
                for (int eb : elements_of(b & ~a))
                    if (is_basis((a & ~bit(ea)) | bit(eb))) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            }
        }
    return true;
}

void check_axioms(const Matroid& m, std::mt19937& rng) {
    // exchange, exhaustively over all basis pairs
    CHECK(exchange_axiom_holds(m.size(), m.bases()));

    // rank axioms: monotone and submodular; exhaustive up to n = 6,
    // sampled beyond
    const bool exhaustive = m.size() <= 6;
    auto pair_check = [&](Mask a, Mask b) {
        CHECK(rank_of(m, a | b) + rank_of(m, a & b) <= rank_of(m, a) + rank_of(m, b));
        if ((a & ~b) == 0) {
            CHECK(rank_of(m, a) <= rank_of(m, b));
            CHECK((closure(m, a) & ~closure(m, b)) == 0);
        }
    };
    if (exhaustive) {
        for (Mask a = 0;; ++a) {
            for (Mask b = 0;; ++b) {
                pair_check(a, b);
                if (b == m.ground_mask()) break;
            }
            if (a == m.ground_mask()) break;
        }
    } else {
        std::uniform_int_distribution<Mask> dist(0, m.ground_mask());
        for (int i = 0; i < 256; ++i) pair_check(dist(rng), dist(rng));
    }

    // closure laws on every subset (n <= 7 throughout this suite)
    for (Mask s = 0;; ++s) {
        Mask c = closure(m, s);
        CHECK((s & ~c) == 0);
        CHECK(closure(m, c) == c);
        CHECK(rank_of(m, c) == rank_of(m, s));
        CHECK(popcount(s) >= rank_of(m, s));
        if (s == m.ground_mask()) break;
    }

    // duality involution and rank complement
    Matroid d = dual(m);
    CHECK(dual(d).bases() == m.bases());
    CHECK(d.rank() == m.size() - m.rank());
}

Matroid random_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    Matroid m = uniform(1, 1);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> nd(1, 7);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(0, n);
            m = uniform(kd(rng), n);
            break;
        }
        case 1: {
            std::uniform_int_distribution<int> nd(2, 6);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, n - 1);
            int k = kd(rng);
            BigInt max = sparse_paving_lambda_max(k, n);
            std::uniform_int_distribution<long> ld(0, static_cast<long>(max.get_si()));
            auto fam = sparse_paving_family(k, n, ld(rng), FamilyMode::greedy);
            m = fam.empty() ? uniform(k, n) : fam.front();
            break;
        }
        default: {
            std::uniform_int_distribution<int> nd(1, 3);
            int n1 = nd(rng), n2 = nd(rng);
            std::uniform_int_distribution<int> k1(0, n1), k2(0, n2);
            m = direct_sum(uniform(k1(rng), n1), uniform(k2(rng), n2));
            break;
        }
    }

    std::uniform_int_distribution<int> mutations(0, 2);
    int rounds = mutations(rng);
    for (int i = 0; i < rounds; ++i) {
        std::uniform_int_distribution<int> op(0, 3);
        std::uniform_int_distribution<Mask> sub(0, m.ground_mask());
        switch (op(rng)) {
            case 0:
                m = dual(m);
                break;
            case 1: {
                m = restriction(m, sub(rng) | bit(0));  // keep at least one element
                break;
            }
            case 2: {
                Mask s = sub(rng);
                if (popcount(s) < m.size()) m = contraction(m, s);
                break;
            }
            default: {
                if (m.bases().size() >= 2) {
                    std::uniform_int_distribution<std::size_t> bi(0, m.bases().size() - 1);
                    std::vector<Mask> bs = m.bases();
                    bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(bi(rng)));
                    try {
                        m = from_bases(m.size(), std::move(bs));
                    } catch (const ValidationError&) {
                        // removing that basis broke the axiom; keep m
                    }
                }
                break;
            }
        }
    }
    return m;
}

}  // namespace

TEST_CASE("axioms hold exhaustively on the deterministic pool (n <= 6)") {
    std::mt19937 rng(7);
    std::vector<Matroid> pool;
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) pool.push_back(uniform(k, n));
    pool.push_back(testsup::u24_minus_01());
    pool.push_back(testsup::u36_minus_two());
    pool.push_back(direct_sum(uniform(1, 2), uniform(2, 3)));
    pool.push_back(direct_sum(uniform(1, 2), uniform(1, 2)));
    pool.push_back(cuspidal_matroid(1, 2, 2, 4));
    pool.push_back(cuspidal_matroid(2, 3, 3, 6));
    pool.push_back(dual(testsup::u36_minus_two()));
    for (const Matroid& m : pool) {
        REQUIRE(m.size() <= 6);
        check_axioms(m, rng);
    }
}

TEST_CASE("axioms hold on 1000 random generated instances") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        Matroid m = random_instance(rng);
        REQUIRE(m.size() >= 1);
        REQUIRE(m.size() <= 7);
        check_axioms(m, rng);
    }
}

TEST_CASE("exchange axiom holds exhaustively at n = 8") {
    // the extremal sparse paving matroid on 8 elements and the uniform ones
    auto sqs = sparse_paving_family(4, 8, 14, FamilyMode::greedy);
    REQUIRE(sqs.size() == 1);
    CHECK(exchange_axiom_holds(8, sqs.front().bases()));
    CHECK(exchange_axiom_holds(8, uniform(3, 8).bases()));
    CHECK(exchange_axiom_holds(8, dual(sqs.front()).bases()));
}

TEST_CASE("restriction/contraction duality on random subsets") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        Matroid m = random_instance(rng);
        std::uniform_int_distribution<Mask> sub(0, m.ground_mask());
        Mask a = sub(rng);
        CHECK(dual(contraction(m, a)).bases() == deletion(dual(m), a).bases());
        CHECK(dual(restriction(m, m.ground_mask() & ~a)).bases() ==
              contraction(dual(m), a).bases());
    }
}
