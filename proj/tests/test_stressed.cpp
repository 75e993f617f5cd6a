#include <doctest.h>

#include "invz/stressed.hpp"
#include "test_support.hpp"

using namespace invz;

TEST_CASE("stressed subsets of the running example") {
    Matroid m = testsup::u24_minus_01();
    Mask a = mask_of({0, 1});
    CHECK(is_stressed(m, a));  // restriction and contraction are both U_{1,2}
    CHECK(is_uniform(restriction(m, a)));
    CHECK(is_uniform(contraction(m, a)));

    auto all = stressed_subsets(m);
    bool found = false;
    for (const auto& s : all)
        if (s.mask == a) {
            found = true;
            CHECK(s.subset_rank == 1);
            CHECK(s.subset_size == 2);
            CHECK(s.cusp_nonempty);
        }
    CHECK(found);
}

TEST_CASE("ground set is stressed with empty cusp") {
    for (const Matroid& m : {uniform(2, 4), uniform(3, 5)}) {
        CHECK(is_stressed(m, m.ground_mask()));
        CHECK(cusp(m, m.ground_mask()).empty());
        auto all = stressed_subsets(m);
        bool found = false;
        for (const auto& s : all)
            if (s.mask == m.ground_mask()) {
                found = true;
                CHECK(!s.cusp_nonempty);
            }
        CHECK(found);
    }
}

TEST_CASE("circuit-hyperplanes of sparse paving matroids are stressed with r=k-1, h=k") {
    for (const Matroid& m : {testsup::u24_minus_01(), testsup::u36_minus_two()}) {
        auto stressed = stressed_subsets(m);
        for (Mask ch : circuit_hyperplanes(m)) {
            bool found = false;
            for (const auto& s : stressed)
                if (s.mask == ch) {
                    found = true;
                    CHECK(s.subset_rank == m.rank() - 1);
                    CHECK(s.subset_size == m.rank());
                    CHECK(s.cusp_nonempty);
                }
            CHECK(found);
        }
    }
}

TEST_CASE("relaxation") {
    Matroid m = testsup::u24_minus_01();
    auto c = cusp(m, mask_of({0, 1}));
    CHECK(c == std::vector<Mask>{mask_of({0, 1})});
    Matroid relaxed = relax(m, mask_of({0, 1}));
    CHECK(relaxed.bases() == uniform(2, 4).bases());

    // relaxing at the full ground set changes nothing
    Matroid u = uniform(2, 4);
    CHECK(relax(u, u.ground_mask()).bases() == u.bases());

    CHECK_THROWS_AS(relax(testsup::u36_minus_two(), mask_of({0, 1})), ValidationError);
    try {
        relax(testsup::u36_minus_two(), mask_of({0, 1}));
    } catch (const ValidationError& e) {
        CHECK(e.code() == errc::not_stressed);
    }
}

TEST_CASE("relaxing all circuit-hyperplanes of a sparse paving matroid yields uniform") {
    for (Matroid m : {testsup::u24_minus_01(), testsup::u36_minus_two()}) {
        const int n = m.size(), k = m.rank();
        while (true) {
            auto chs = circuit_hyperplanes(m);
            if (chs.empty()) break;
            m = relax(m, chs.front());
        }
        CHECK(m.bases() == uniform(k, n).bases());
    }
}

TEST_CASE("cuspidal matroids") {
    // Rel(U_{1,2} (+) U_{1,2}, {2,3})
    Matroid lam = cuspidal_matroid(1, 2, 2, 4);
    CHECK(lam.size() == 4);
    CHECK(lam.rank() == 2);
    CHECK(lam.bases().size() == 5);

    // simplification of the corank-one cuspidal matroid is U_{k,h+1}:
    // same size, rank, and full basis count
    for (int k = 2; k <= 3; ++k)
        for (int h = k; h <= 4; ++h)
            for (int n = h + 1; n <= 6; ++n) {
                Matroid c = cuspidal_matroid(k - 1, k, h, n);
                Matroid s = simplify(c);
                CHECK(s.size() == h + 1);
                CHECK(s.rank() == k);
                CHECK(is_uniform(s));
            }

    CHECK_THROWS_AS(cuspidal_matroid(3, 2, 2, 4), ValidationError);   // r > h
    CHECK_THROWS_AS(cuspidal_matroid(1, 5, 2, 4), ValidationError);   // k-r > n-h
}

TEST_CASE("sparse paving family: generation and bounds") {
    auto fam1 = sparse_paving_family(2, 4, 1, FamilyMode::all);
    CHECK(fam1.size() == 6);  // one per removed basis, all isomorphic
    for (const auto& m : fam1) {
        CHECK(m.bases().size() == 5);
        CHECK(is_sparse_paving(m));
        CHECK(circuit_hyperplanes(m).size() == 1);
    }

    auto fam0 = sparse_paving_family(2, 4, 0, FamilyMode::all);
    REQUIRE(fam0.size() == 1);
    CHECK(fam0.front().bases() == uniform(2, 4).bases());

    CHECK_THROWS_AS(sparse_paving_family(2, 4, 4, FamilyMode::all), ValidationError);
    try {
        sparse_paving_family(2, 4, 4, FamilyMode::all);
    } catch (const ValidationError& e) {
        CHECK(e.code() == errc::infeasible_lambda);
    }

    CHECK(sparse_paving_lambda_max(2, 4) == 2);
    CHECK(sparse_paving_lambda_max(3, 6) == 5);
    CHECK(sparse_paving_lambda_max(3, 7) == 7);
    CHECK(sparse_paving_lambda_max(4, 8) == 14);

    auto greedy = sparse_paving_family(2, 4, 2, FamilyMode::greedy);
    REQUIRE(greedy.size() == 1);
    CHECK(circuit_hyperplanes(greedy.front()).size() == 2);

    // the bound is necessary, not sufficient: no 5 triples of [6] pairwise
    // sharing at most one point, so lambda = 5 is unrealizable at (3,6)
    CHECK(sparse_paving_family(3, 6, 5, FamilyMode::all, 1000).empty());
    CHECK(sparse_paving_family(3, 6, 4, FamilyMode::greedy).size() == 1);

    // the extremal cases exist: Fano-type at (3,7), quadruple system at (4,8)
    CHECK(sparse_paving_family(3, 7, 7, FamilyMode::greedy).size() == 1);
    auto sqs = sparse_paving_family(4, 8, 14, FamilyMode::greedy);
    REQUIRE(sqs.size() == 1);
    CHECK(circuit_hyperplanes(sqs.front()).size() == 14);

    // deterministic output
    auto again = sparse_paving_family(2, 4, 1, FamilyMode::all);
    REQUIRE(again.size() == fam1.size());
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(again[i].bases() == fam1[i].bases());
}
