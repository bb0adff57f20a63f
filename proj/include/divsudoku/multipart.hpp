// Sudoku tri-partitions, pi(L), synchronized partitions, sigma(L) and the
// group-orbit synchronization of a ds-isotopism class.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

// All sudoku partitions of m^2 elements, canonically ordered.
// |universe(3)| = 280, |universe(4)| = 2627625.
std::vector<SudokuPartition> partition_universe(int m);

// The (m!)^(m+1) permutations preserving the standard partition of rank m.
std::vector<Permutation> standard_partition_group(int m);

// All sudoku tri-partitions with respect to which L is a division sudoku
// (rank-3 fast path: 280 row partitions, column candidates from the
// all-9-symbols band x column-triple test, exactly two pile candidates per
// top-left minisquare). Duplicate-free, canonically sorted.
std::vector<TriPartition> tri_partitions(const LatinSquare& L);

// Synchronized partitions of L: partitions P with (P,P,P) a division-sudoku
// tri-partition.
std::vector<SudokuPartition> sigma_partitions(const LatinSquare& L);

struct SynchronizeResult {
    LatinSquare square;                     // witness attaining sigma(class)
    int sigma = 0;                          // sigma of the ds-isotopism class
    std::vector<SudokuPartition> partitions;  // its synchronized partitions
};

// Exact sigma of the ds-isotopism class of L (rank 3): maximize over pairs
// (g,h) of standard-partition preservers the number of distinct Y^B among
// tri-partitions with g*Y^S = Y^B and h*Y^P = Y^B; witness
// L'(x,y) = h(L(x, g^-1(y))).
SynchronizeResult synchronize(const LatinSquare& L);

// Every cross-partition block pair intersects in exactly one point.
bool is_affine_collection(const std::vector<SudokuPartition>& partitions);

// Rank-4 direct scan: synchronized partitions of an order-16 square over the
// full 2,627,625-element universe.
std::vector<SudokuPartition> sigma_partitions_rank4(const LatinSquare& L, int threads = 1);

}  // namespace divsudoku
