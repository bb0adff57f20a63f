// Randomized property suites: predicate agreement, invariant stability,
// canonicalization round-trips, and the subspace-goodness equivalence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "divsudoku/algebra.hpp"
#include "divsudoku/classification.hpp"
#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "divsudoku/enumeration.hpp"
#include "divsudoku/invariants.hpp"
#include "test_util.hpp"

using namespace divsudoku;

namespace {

// The three characterizations that must agree on every order-9 latin square:
// the direct slice conditions, "all six conjugates are sudokus", and the
// shredding of all left/right/division translations.
bool agree_on(const LatinSquare& L, const TriPartition& tri) {
    bool direct = is_division_sudoku(L, tri);
    bool via_conjugates = true;
    for (const auto& th : ConjugateLabel::all())
        if (!is_sudoku(conjugate(L, th), tri)) {
            via_conjugates = false;
            break;
        }
    bool via_shredding = is_division_sudoku_shred(L, tri);
    return direct == via_conjugates && via_conjugates == via_shredding;
}

}  // namespace

TEST_CASE("three-way predicate agreement on the corpus") {
    auto tri = standard_tri_partition(3);
    int positives = 0;
    for (int k = 1; k <= 186; ++k) {
        LatinSquare L = corpus::appendix(k);
        REQUIRE(agree_on(L, tri));
        if (is_division_sudoku(L, tri)) ++positives;
    }
    CHECK(positives == 186);
    for (const auto& name : corpus::named_labels()) REQUIRE(agree_on(corpus::named(name), tri));
}

TEST_CASE("three-way predicate agreement on 10000 random latin squares") {
    std::mt19937 rng(20260823);
    auto tri = standard_tri_partition(3);
    int disagreements = 0;
    for (int t = 0; t < 10000; ++t) {
        LatinSquare L = testutil::random_latin_square(9, rng);
        if (!agree_on(L, tri)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("invariants are stable under 1000 random ds-isotopisms") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> pick(1, 186);
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
        LatinSquare L = corpus::appendix(pick(rng));
        LatinSquare M = apply_isotopism(L, testutil::random_ds_isotopism(3, rng));
        if (canonical_key(intercalate_invariant(L)) != canonical_key(intercalate_invariant(M)))
            ++failures;
        if (canonical_key(minisquare_invariant(L)) != canonical_key(minisquare_invariant(M)))
            ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("canonicalization round-trip on 1000 random ds-isotopism images") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> pick(1, 186);
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
        int k = pick(rng);
        LatinSquare L = corpus::appendix(k);
        LatinSquare M = apply_isotopism(L, testutil::random_ds_isotopism(3, rng));
        auto [C, iso] = canonicalize_to_template(M);
        bool ok = extends_template(C) && apply_isotopism(M, iso) == C &&
                  is_ds_isotopism(iso, 3) &&
                  ds_isotopism_between_template_extensions(C, L).has_value();
        if (!ok) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("subspace goodness: three conditions agree on 1000 random (W,c) pairs") {
    GaloisField F16(2, 4), F81(3, 4);
    auto subs16 = all_subspaces(F16, 2);
    auto subs81 = all_subspaces(F81, 2);
    auto sub16 = F16.subfield(4);
    auto sub81 = F81.subfield(9);
    std::mt19937 rng(8128);
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
        bool use16 = t % 2 == 0;
        const GaloisField& F = use16 ? F16 : F81;
        const auto& subs = use16 ? subs16 : subs81;
        const auto& subfield = use16 ? sub16 : sub81;
        const auto& W = subs[std::uniform_int_distribution<size_t>(0, subs.size() - 1)(rng)];
        int c;
        do {
            c = std::uniform_int_distribution<int>(2, F.order() - 1)(rng);
        } while (std::find(subfield.begin(), subfield.end(), c) != subfield.end());
        int cm1 = F.sub(c, 1);
        std::set<int> setW(W.begin(), W.end()), Wc, Wc1;
        for (int w : W) {
            Wc.insert(F.mul(w, c));
            Wc1.insert(F.mul(w, cm1));
        }
        auto meet = [](const std::set<int>& A, const std::set<int>& B) {
            int n = 0;
            for (int a : A)
                if (B.count(a)) ++n;
            return n;
        };
        bool g1 = meet(setW, Wc) == 1, g2 = meet(setW, Wc1) == 1, g3 = meet(Wc, Wc1) == 1;
        if (g1 != g2 || g2 != g3) ++failures;
    }
    CHECK(failures == 0);
}
