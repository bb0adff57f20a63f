#include <doctest.h>

#include <random>

#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "divsudoku/enumeration.hpp"
#include "divsudoku/invariants.hpp"
#include "test_util.hpp"

using namespace divsudoku;

TEST_CASE("intercalate invariant worked example") {
    LatinSquare L = corpus::named("ex-iota");
    CHECK(render(intercalate_invariant(L)) == "(B1,S3,P3) (B2,S2,P1) (B3,S1,P2) (B3,S3,P1)");
}

TEST_CASE("minisquare invariant worked example") {
    LatinSquare L = corpus::named("ex-mu");
    CHECK(render(minisquare_invariant(L)) == "B1->S1 B2->S3 B3->S2 P1->S2 P2->S1 P3->S3");
}

TEST_CASE("Q has 18 intercalates and pile-to-block mu edges") {
    LatinSquare Q = corpus::named("Q");
    CHECK(find_intercalates(Q).size() == 18);
    CHECK(render(minisquare_invariant(Q)) == "P1->B1 P1->S1 P2->B2 P2->S2 P3->B3 P3->S3");
}

TEST_CASE("canonical keys are stable under ds-isotopism") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        LatinSquare L = corpus::appendix(1 + trial * 7 % 186);
        LatinSquare M = apply_isotopism(L, testutil::random_ds_isotopism(3, rng));
        CHECK(canonical_key(intercalate_invariant(L)) == canonical_key(intercalate_invariant(M)));
        CHECK(canonical_key(minisquare_invariant(L)) == canonical_key(minisquare_invariant(M)));
        CHECK(invariants_equivalent(intercalate_invariant(L), intercalate_invariant(M)));
        CHECK(invariants_equivalent(minisquare_invariant(L), minisquare_invariant(M)));
    }
}

TEST_CASE("enumeration template has 21 filled cells and known entries") {
    PartialLatinSquare T = template_square();
    CHECK(T.filled_count() == 21);
    // Top-left minisquare rows (1-based symbols): 147 / 825 / 693.
    CHECK(T.at(0, 0) == 0);
    CHECK(T.at(0, 1) == 3);
    CHECK(T.at(0, 2) == 6);
    CHECK(T.at(1, 0) == 7);
    CHECK(T.at(2, 2) == 2);
    // Band-1 diagonal entries of stacks 2 and 3.
    CHECK(T.at(0, 3) == 1);
    CHECK(T.at(1, 4) == 2);
    CHECK(T.at(2, 5) == 0);
    CHECK(T.at(0, 6) == 2);
    CHECK(T.at(1, 7) == 0);
    CHECK(T.at(2, 8) == 1);
    // Stack-1 mirrors.
    CHECK(T.at(3, 0) == 1);
    CHECK(T.at(6, 0) == 2);
}

TEST_CASE("appendix squares extend the template; L0 does not") {
    for (int k : {1, 17, 100, 186}) CHECK(extends_template(corpus::appendix(k)));
    CHECK(!extends_template(corpus::named("L0")));
}

TEST_CASE("canonicalization fixes template extensions") {
    for (int k : {1, 17, 121, 175, 179}) {
        LatinSquare L = corpus::appendix(k);
        auto [C, iso] = canonicalize_to_template(L);
        CHECK(C == L);
        CHECK(iso.is_identity());
    }
}

TEST_CASE("canonicalization maps ds-isotopism images back to template form") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        LatinSquare L = corpus::appendix(1 + (trial * 31) % 186);
        Isotopism iso = testutil::random_ds_isotopism(3, rng);
        LatinSquare M = apply_isotopism(L, iso);
        auto [C, back] = canonicalize_to_template(M);
        CHECK(extends_template(C));
        CHECK(apply_isotopism(M, back) == C);
        CHECK(is_ds_isotopism(back, 3));
    }
}

TEST_CASE("total count formula") {
    CHECK(total_standard_count(7741) == 104015259648LL);
    CHECK(total_standard_count(1) == 13436928LL);  // 2^11 * 3^8
}
