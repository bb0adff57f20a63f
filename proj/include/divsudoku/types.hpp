// Core value types: latin squares, permutations, isotopisms, sudoku partitions.
//
// Symbols, rows and columns are 0-based internally; all file and CLI I/O is
// 1-based. Every type here is an immutable value after construction and safe
// to share across threads.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divsudoku {

// n x n grid of symbols 0..n-1 with the latin property (each symbol once per
// row and column). Construction does not validate; call is_latin() or use
// checked factory functions in io.hpp.
struct LatinSquare {
    int n = 0;
    std::vector<int> cells;  // row-major, size n*n

    LatinSquare() = default;
    explicit LatinSquare(int order) : n(order), cells(order * order, 0) {}

    int at(int r, int c) const { return cells[r * n + c]; }
    int& at(int r, int c) { return cells[r * n + c]; }

    bool is_latin() const;

    bool operator==(const LatinSquare&) const = default;
    // Lexicographic row-major comparison; used for canonical representatives.
    bool operator<(const LatinSquare& o) const { return cells < o.cells; }
};

// Partial square: -1 marks an empty cell; filled cells must not clash in any
// row or column.
struct PartialLatinSquare {
    int n = 0;
    std::vector<int> cells;  // row-major, -1 = empty

    PartialLatinSquare() = default;
    explicit PartialLatinSquare(int order) : n(order), cells(order * order, -1) {}

    int at(int r, int c) const { return cells[r * n + c]; }
    int& at(int r, int c) { return cells[r * n + c]; }
    int filled_count() const;
};

struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) {}
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }
    Permutation inverse() const;
    // (a.then(b))(x) == b(a(x))
    Permutation then(const Permutation& b) const;
    bool is_valid() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
};

struct Isotopism {
    Permutation alpha, beta, gamma;  // rows, columns, symbols

    static Isotopism identity(int degree);
    Isotopism inverse() const;
    bool is_identity() const;
};

// One of the six conjugate labels: a permutation of the coordinate positions
// (row, column, symbol) of the orthogonal array. theta[i] tells which original
// coordinate lands in position i of the conjugated triple.
struct ConjugateLabel {
    std::array<int, 3> theta;

    static constexpr std::array<int, 3> kIdentity{0, 1, 2};
    static constexpr std::array<int, 3> kTranspose{1, 0, 2};   // (1,2)
    static constexpr std::array<int, 3> kRightDivision{2, 1, 0};  // (1,3)
    static constexpr std::array<int, 3> kLeftDivision{0, 2, 1};   // (2,3)
    static constexpr std::array<int, 3> kCycle123{1, 2, 0};
    static constexpr std::array<int, 3> kCycle132{2, 0, 1};

    static const std::array<ConjugateLabel, 6>& all();
};

// Partition of {0,...,m^2-1} into m blocks of size m.
struct SudokuPartition {
    int rank = 0;                // m
    std::vector<int> block_of;   // size m^2, values 0..m-1

    SudokuPartition() = default;
    SudokuPartition(int m, std::vector<int> blocks);

    int size() const { return rank * rank; }
    // Blocks listed by minimum element ascending, members ascending.
    std::vector<std::vector<int>> blocks() const;
    // Renumbers blocks so that block ids follow the canonical block order.
    SudokuPartition canonical() const;
    // Image partition under a permutation of the ground set.
    SudokuPartition mapped_by(const Permutation& p) const;

    bool operator==(const SudokuPartition&) const = default;
    bool operator<(const SudokuPartition& o) const { return block_of < o.block_of; }
};

struct TriPartition {
    SudokuPartition rows, cols, syms;

    bool synchronized_() const { return rows == cols && cols == syms; }
    bool operator==(const TriPartition&) const = default;
    bool operator<(const TriPartition& o) const;
};

SudokuPartition standard_partition(int m);
TriPartition standard_tri_partition(int m);

}  // namespace divsudoku
