// Conjugates, isotopism action, the division-sudoku predicates and small
// quasigroup utilities.
#pragma once

#include <cstdint>
#include <utility>

#include "divsudoku/types.hpp"

namespace divsudoku {

// L^theta: permute the coordinates of the orthogonal array O(L).
LatinSquare conjugate(const LatinSquare& L, const ConjugateLabel& theta);

// M with M(alpha(x), beta(y)) = gamma(L(x,y)).
LatinSquare apply_isotopism(const LatinSquare& L, const Isotopism& iso);

// Right/left division tables: rdiv[z][y] = x and ldiv[x][z] = y iff L(x,y)=z.
struct DivisionTables {
    LatinSquare rdiv, ldiv;
};
DivisionTables division_tables(const LatinSquare& L);

// Every band (row block) x stack (column block) intersection contains all
// symbols. Only the rows and cols partitions are consulted.
bool is_sudoku(const LatinSquare& L, const TriPartition& tri);

// All three slice conditions: band x stack covers all symbols, band x pile all
// columns, stack x pile all rows. Equivalent to L, L^(1,3), L^(2,3) being
// sudokus.
bool is_division_sudoku(const LatinSquare& L, const TriPartition& tri);
bool is_division_sudoku_standard(const LatinSquare& L);

// theta shreds p iff |theta(X_i) n X_j| = 1 for all blocks i,j.
bool shreds(const Permutation& theta, const SudokuPartition& p);

// Translation-shredding characterization; requires a synchronized
// tri-partition. Must agree with is_division_sudoku.
bool is_division_sudoku_shred(const LatinSquare& L, const TriPartition& tri);

// Number of (x,y,z) with x*(y*z) == (x*y)*z.
long long count_associative_triples(const LatinSquare& L);

bool is_idempotent(const LatinSquare& L);

// For a rank-3 template extension (block-1 diagonal reads 0,1,2), permute
// rows/columns within blocks 2 and 3 to make the square idempotent.
std::pair<LatinSquare, Isotopism> make_idempotent(const LatinSquare& L);

// True iff all three maps preserve the standard partition of the given rank.
bool is_ds_isotopism(const Isotopism& iso, int rank);

}  // namespace divsudoku
