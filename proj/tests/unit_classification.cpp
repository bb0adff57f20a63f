#include <doctest.h>

#include <random>

#include "divsudoku/classification.hpp"
#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "test_util.hpp"

using namespace divsudoku;

TEST_CASE("template chase finds ds-isotopisms between template extensions") {
    // Each square is ds-isotopic to itself via the identity parameters.
    for (int k : {1, 17, 186}) {
        LatinSquare L = corpus::appendix(k);
        auto iso = ds_isotopism_between_template_extensions(L, L);
        REQUIRE(iso.has_value());
        CHECK(apply_isotopism(L, *iso) == L);
    }
    // Distinct appendix representatives are never ds-isotopic.
    CHECK(!ds_isotopism_between_template_extensions(corpus::appendix(1), corpus::appendix(2)));
    CHECK(!ds_isotopism_between_template_extensions(corpus::appendix(17), corpus::appendix(179)));
}

TEST_CASE("general ds-isotopism search recovers random ds-isotopisms") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        LatinSquare L = corpus::appendix(1 + (trial * 23) % 186);
        LatinSquare M = apply_isotopism(L, testutil::random_ds_isotopism(3, rng));
        auto iso = ds_isotopism_general(L, M, 3);
        REQUIRE(iso.has_value());
        CHECK(apply_isotopism(L, *iso) == M);
    }
    CHECK(!ds_isotopism_general(corpus::appendix(17), corpus::appendix(18), 3));
}

TEST_CASE("unrestricted isotopism search") {
    // DS(9,18) and DS(9,19) are isotopic but not ds-isotopic.
    LatinSquare A = corpus::appendix(18), B = corpus::appendix(19);
    CHECK(!ds_isotopism_general(A, B, 3));
    auto iso = isotopism_general(A, B);
    REQUIRE(iso.has_value());
    CHECK(apply_isotopism(A, *iso) == B);
    // Q admits no isotopism to its transpose.
    LatinSquare Q = corpus::named("Q");
    CHECK(!isotopism_general(Q, conjugate(Q, ConjugateLabel{ConjugateLabel::kTranspose})));
}

TEST_CASE("isotopy fingerprint is isotopy-stable") {
    std::mt19937 rng(7);
    LatinSquare L = corpus::appendix(33);
    // An arbitrary (not block-preserving) isotopism must keep the fingerprint.
    std::vector<int> a(9), b(9), g(9);
    for (auto* v : {&a, &b, &g}) {
        std::iota(v->begin(), v->end(), 0);
        std::shuffle(v->begin(), v->end(), rng);
    }
    LatinSquare M = apply_isotopism(L, {Permutation(a), Permutation(b), Permutation(g)});
    CHECK(isotopy_fingerprint(L) == isotopy_fingerprint(M));
    // Isotopic squares always share the fingerprint.
    CHECK(isotopy_fingerprint(corpus::appendix(18)) == isotopy_fingerprint(corpus::appendix(19)));
}

TEST_CASE("group isotopy and translation cycle structure") {
    LatinSquare Z(9);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) Z.at(x, y) = (x + y) % 9;
    CHECK(is_isotopic_to_group(Z));
    LatinSquare Q = corpus::named("Q");
    CHECK(every_left_translation_has_4_cycle(Q));
    CHECK(!any_right_translation_has_4_cycle(Q));
}
