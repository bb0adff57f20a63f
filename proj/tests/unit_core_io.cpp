#include <doctest.h>

#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "divsudoku/io.hpp"

using namespace divsudoku;

TEST_CASE("conjugates: transpose and division tables") {
    LatinSquare Q = corpus::named("Q");
    LatinSquare QT = conjugate(Q, ConjugateLabel{ConjugateLabel::kTranspose});
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) CHECK(QT.at(y, x) == Q.at(x, y));

    // The (1,3) and (2,3) conjugates are the right and left division tables.
    CHECK(conjugate(Q, ConjugateLabel{ConjugateLabel::kRightDivision}) == corpus::named("Qrdiv"));
    CHECK(conjugate(Q, ConjugateLabel{ConjugateLabel::kLeftDivision}) == corpus::named("Qldiv"));
    auto d = division_tables(Q);
    CHECK(d.rdiv == corpus::named("Qrdiv"));
    CHECK(d.ldiv == corpus::named("Qldiv"));

    // Conjugating by a label and its inverse returns the square.
    for (const auto& th : ConjugateLabel::all()) {
        LatinSquare C = conjugate(Q, th);
        ConjugateLabel inv{};
        for (int i = 0; i < 3; ++i) inv.theta[th.theta[i]] = i;
        CHECK(conjugate(C, inv) == Q);
    }
}

TEST_CASE("division sudoku predicates on named squares") {
    CHECK(is_division_sudoku_standard(corpus::named("L0")));
    CHECK(is_division_sudoku_standard(corpus::named("Q")));
    for (int k : {1, 2, 17, 18, 175, 179, 186})
        CHECK(is_division_sudoku_standard(corpus::appendix(k)));

    // The cyclic group Z9 table is latin and a sudoku but not a division
    // sudoku (its transpose-free conditions fail on bands x piles).
    LatinSquare Z(9);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) Z.at(x, y) = (x + y) % 9;
    CHECK(Z.is_latin());
    CHECK(!is_division_sudoku_standard(Z));
}

TEST_CASE("all six conjugates of a division sudoku are sudokus") {
    LatinSquare L = corpus::appendix(17);
    for (const auto& th : ConjugateLabel::all())
        CHECK(is_sudoku(conjugate(L, th), standard_tri_partition(3)));
}

TEST_CASE("shredding characterization agrees with the direct predicate") {
    auto tri = standard_tri_partition(3);
    for (int k : {1, 17, 179}) {
        LatinSquare L = corpus::appendix(k);
        CHECK(is_division_sudoku_shred(L, tri));
    }
    LatinSquare Z(9);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) Z.at(x, y) = (x + y) % 9;
    CHECK(!is_division_sudoku_shred(Z, tri));
}

TEST_CASE("associative triples and idempotence") {
    CHECK(count_associative_triples(corpus::named("L0")) == 9);
    LatinSquare Q = corpus::named("Q");
    CHECK(is_idempotent(Q));
    // A group table of order 9 is fully associative.
    LatinSquare Z(9);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) Z.at(x, y) = (x + y) % 9;
    CHECK(count_associative_triples(Z) == 729);
}

TEST_CASE("make_idempotent produces an idempotent ds-isotopic square") {
    for (int k : {17, 175, 179}) {
        LatinSquare L = corpus::appendix(k);
        auto [I, iso] = make_idempotent(L);
        CHECK(is_idempotent(I));
        CHECK(is_ds_isotopism(iso, 3));
        CHECK(apply_isotopism(L, iso) == I);
        CHECK(is_division_sudoku_standard(I));
    }
}

TEST_CASE("square parsing and rendering round-trips") {
    LatinSquare L0 = corpus::named("L0");
    std::string text = render_square(L0);
    CHECK(parse_square(text) == L0);
    CHECK(L0.at(0, 0) == 0);  // cell (1,1) = 1
    CHECK(L0.at(8, 8) == 8);  // cell (9,9) = 9

    // Comments and blank-line-separated multi-square files.
    std::string two = "# two squares\n" + render_square(L0) + "\n" + render_square(corpus::named("Q"));
    auto squares = parse_squares(two);
    REQUIRE(squares.size() == 2);
    CHECK(squares[0] == L0);
    CHECK(squares[1] == corpus::named("Q"));
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_square("1 2\n2 1\n3 3"), ParseError);
    // Duplicated symbol in a row is reported with the row number.
    try {
        parse_square("1 2 3\n2 3 1\n3 3 2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_square("1 2 3\n2 3 4\n3 1 2"), ParseError);  // out of range
    CHECK_THROWS_AS(parse_square("1 2 x\n2 3 1\n3 1 2"), ParseError);  // bad token
}

TEST_CASE("partition parsing") {
    SudokuPartition p = parse_partition("{159 267 348}");
    auto blocks = p.blocks();
    CHECK(blocks[0] == std::vector<int>{0, 4, 8});
    CHECK(blocks[1] == std::vector<int>{1, 5, 6});
    CHECK(blocks[2] == std::vector<int>{2, 3, 7});
    CHECK(render_partition(p) == "{159 267 348}");

    CHECK_THROWS_AS(parse_partition("{123 456 78}"), ParseError);

    SudokuPartition q = parse_partition("1,5,9,13|2,6,10,14|3,7,11,15|4,8,12,16");
    CHECK(q.rank == 4);
    CHECK(q.blocks()[0] == std::vector<int>{0, 4, 8, 12});
    CHECK(parse_partition(render_partition(q)) == q);
}
