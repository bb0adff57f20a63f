// Rank-3 invariants: the intercalate structure invariant (iota) and the
// minisquare structure invariant (mu), with equivalence up to within-type
// relabelings and canonical keys.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

struct Intercalate {
    std::array<int, 2> rows, cols, symbols;
};

std::vector<Intercalate> find_intercalates(const LatinSquare& L);

// 3x3x3 bit array indexed (band, stack, pile): a bit is set iff some
// intercalate has that band/stack/pile profile, where the profile coordinate
// is the containing block when both indices share a block and otherwise the
// unique third block disjoint from the intercalate.
struct IntercalateInvariant {
    std::array<std::array<std::array<bool, 3>, 3>, 3> bits{};
    bool operator==(const IntercalateInvariant&) const = default;
};

// Six directed edge families over vertices {B1..B3, S1..S3, P1..P3}. Family
// f(U,V) holds edge (i,j) iff in the conjugate square with rows playing role U
// and columns role V, the two minisquares of row-block i outside column-block
// j have identical minicolumn symbol-set families. Families are ordered
// (B,S),(S,B),(P,S),(S,P),(B,P),(P,B).
struct MinisquareInvariant {
    std::array<std::array<std::array<bool, 3>, 3>, 6> edges{};
    bool operator==(const MinisquareInvariant&) const = default;
};

IntercalateInvariant intercalate_invariant(const LatinSquare& L);
MinisquareInvariant minisquare_invariant(const LatinSquare& L);

// Equivalence up to independent permutations of band, stack and pile labels
// (216 candidates).
bool invariants_equivalent(const IntercalateInvariant& a, const IntercalateInvariant& b);
bool invariants_equivalent(const MinisquareInvariant& a, const MinisquareInvariant& b);

// Minimum serialized form over the 216 relabelings; equal iff equivalent.
uint64_t canonical_key(const IntercalateInvariant& inv);
uint64_t canonical_key(const MinisquareInvariant& inv);

// 1-based (band,stack,pile) triples, lexicographically sorted.
std::string render(const IntercalateInvariant& inv);
// Sorted edge list like "B1->S1"; pile-involving edges are printed with the
// pile vertex as source, matching the paper's figures.
std::string render(const MinisquareInvariant& inv);

}  // namespace divsudoku
