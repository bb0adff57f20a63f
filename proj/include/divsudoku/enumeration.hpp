// The canonical partial table, exhaustive completion, total counting and
// canonicalization into template form.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

// The 21-cell partial table: minisquare B1 n S1 plus one cell of each
// remaining minirow of band 1 and minicolumn of stack 1.
PartialLatinSquare template_square();

bool extends_template(const LatinSquare& L);

// All standard division sudokus of rank 3 extending the template, in
// lexicographic (row-major) order. Deterministic regardless of thread count.
std::vector<LatinSquare> enumerate_extensions(int threads = 1);

// 2^11 * 3^8 * |extensions|.
long long total_standard_count(long long extension_count);

// Brings a standard division sudoku of rank 3 into template form by a
// ds-isotopism, following the canonical-form argument:
//  (a) if the antidiagonal of B1 n S1 carries a symbol block, swap columns
//      2,3; relabel symbols so the minisquare's broken diagonals read the
//      canonical pattern;
//  (b) move the {1,2,3}-transversals of B1 n S2 and B1 n S3 onto the
//      diagonals by column moves within the stacks, swapping the two column
//      blocks if needed;
//  (c) dually for stack 1 with row moves.
// Returns the canonical square and the ds-isotopism from L to it; template
// extensions map to themselves under the identity.
std::pair<LatinSquare, Isotopism> canonicalize_to_template(const LatinSquare& L);

}  // namespace divsudoku
