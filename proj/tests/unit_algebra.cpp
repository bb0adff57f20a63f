#include <doctest.h>

#include <algorithm>
#include <random>

#include "divsudoku/algebra.hpp"
#include "divsudoku/core.hpp"
#include "divsudoku/multipart.hpp"

using namespace divsudoku;

TEST_CASE("field moduli and basic arithmetic") {
    GaloisField F9(3, 2);
    CHECK(F9.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
    GaloisField F16(2, 4);
    CHECK(F16.modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1

    // Field axioms, exhaustively for GF(9).
    for (int a = 0; a < 9; ++a) {
        CHECK(F9.add(a, 0) == a);
        CHECK(F9.mul(a, 1) == a);
        CHECK(F9.add(a, F9.neg(a)) == 0);
        if (a) CHECK(F9.mul(a, F9.inv(a)) == 1);
        for (int b = 0; b < 9; ++b) {
            CHECK(F9.add(a, b) == F9.add(b, a));
            CHECK(F9.mul(a, b) == F9.mul(b, a));
            for (int c = 0; c < 9; ++c) {
                CHECK(F9.mul(a, F9.add(b, c)) == F9.add(F9.mul(a, b), F9.mul(a, c)));
                CHECK(F9.mul(F9.mul(a, b), c) == F9.mul(a, F9.mul(b, c)));
            }
        }
    }
}

TEST_CASE("subfields and default twists") {
    GaloisField F9(3, 2);
    CHECK(F9.subfield(3) == std::vector<int>{0, 1, 2});
    CHECK(default_twist(F9, 3) == 3);
    GaloisField F16(2, 4);
    CHECK(F16.subfield(4) == std::vector<int>{0, 1, 6, 7});
    CHECK(default_twist(F16, 4) == 2);
}

TEST_CASE("quadratic nearfield over GF(9)") {
    QuadraticNearfield D(3, 2);
    const GaloisField& F = D.field();
    // Squares of GF(9).
    std::vector<int> squares;
    for (int x = 0; x < 9; ++x)
        if (D.is_square(x)) squares.push_back(x);
    CHECK(squares == std::vector<int>{0, 1, 2, 3, 6});

    // Exhaustive axioms: associativity, left distributivity, identity,
    // inverses, zero absorption.
    for (int x = 0; x < 9; ++x) {
        CHECK(D.mul(1, x) == x);
        CHECK(D.mul(x, 1) == x);
        CHECK(D.mul(0, x) == 0);
        CHECK(D.mul(x, 0) == 0);
        if (x) CHECK(D.mul(x, D.inv(x)) == 1);
        for (int y = 0; y < 9; ++y)
            for (int z = 0; z < 9; ++z) {
                CHECK(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
                CHECK(D.mul(x, F.add(y, z)) == F.add(D.mul(x, y), D.mul(x, z)));
            }
    }
    // lambda o x = lambda x for lambda in the prime field; (-1) o x = -x.
    for (int l : {0, 1, 2})
        for (int x = 0; x < 9; ++x) CHECK(D.mul(l, x) == F.mul(l, x));
    int m1 = F.neg(1);
    for (int x = 0; x < 9; ++x) CHECK(D.mul(m1, x) == F.neg(x));
}

TEST_CASE("D25 nearfield axioms, sampled") {
    QuadraticNearfield D(5, 2);
    const GaloisField& F = D.field();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, 24);
    for (int t = 0; t < 2000; ++t) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        CHECK(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
        CHECK(D.mul(x, F.add(y, z)) == F.add(D.mul(x, y), D.mul(x, z)));
    }
    for (int x = 1; x < 25; ++x) CHECK(D.mul(D.inv(x), x) == 1);
}

TEST_CASE("Stein squares over GF(9) and D9") {
    GaloisField F9(3, 2);
    LatinSquare Lf = stein_field_square(F9, 3);
    CHECK(Lf.is_latin());
    CHECK(is_division_sudoku_standard(Lf));
    CHECK(is_idempotent(Lf));

    QuadraticNearfield D(3, 2);
    LatinSquare Ln = stein_nearfield_square(D, 3);
    CHECK(Ln.is_latin());
    CHECK(is_division_sudoku_standard(Ln));
    CHECK(is_idempotent(Ln));
    CHECK(Lf != Ln);
}

TEST_CASE("subspace counts and goodness over GF(16)") {
    GaloisField F16(2, 4);
    auto subs = all_subspaces(F16, 2);
    CHECK(subs.size() == 35);
    int c = default_twist(F16, 4);
    auto good = good_subspaces(F16, 2, c);
    CHECK(good.size() == 20);
    // Every good subspace yields a sudoku partition of rank 4.
    for (const auto& W : good) {
        SudokuPartition p = coset_partition(F16, W);
        CHECK(p.rank == 4);
    }
}

TEST_CASE("line partitions") {
    GaloisField F9(3, 2);
    auto lines = line_partitions(F9, 3);
    CHECK(lines.size() == 4);
    CHECK(is_affine_collection(lines));
    GaloisField F16(2, 4);
    auto lines16 = line_partitions(F16, 4);
    CHECK(lines16.size() == 5);
    CHECK(is_affine_collection(lines16));
}

TEST_CASE("construction report q=3") {
    auto field = construction_report(3, "field");
    CHECK(field.c == 3);
    CHECK(field.exact_sigma == 4);
    CHECK(field.isotopic_to_group);
    CHECK(field.lines_affine);
    CHECK(field.verified_partitions.size() == 4);

    auto near = construction_report(3, "nearfield");
    CHECK(near.exact_sigma == 4);
    CHECK(!near.isotopic_to_group);
    CHECK(near.verified_partitions.size() == 4);
}
