#include "divsudoku/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "divsudoku/core.hpp"

namespace divsudoku {

std::vector<Intercalate> find_intercalates(const LatinSquare& L) {
    const int n = L.n;
    std::vector<Intercalate> out;
    // pos[r][s] = column of symbol s in row r
    std::vector<std::vector<int>> pos(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) pos[r][L.at(r, c)] = c;
    for (int r1 = 0; r1 < n; ++r1) {
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            for (int c1 = 0; c1 < n; ++c1) {
                int a = L.at(r1, c1), b = L.at(r2, c1);
                int c2 = pos[r1][b];
                if (c2 > c1 && L.at(r2, c2) == a)
                    out.push_back({{r1, r2}, {c1, c2}, {std::min(a, b), std::max(a, b)}});
            }
        }
    }
    return out;
}

namespace {

// Block profile of an index pair: the common block, or the unique third block
// disjoint from both.
int profile(int u, int v) {
    int bu = u / 3, bv = v / 3;
    return bu == bv ? bu : 3 - bu - bv;
}

// band->stack minicolumn-comparison edges of a 9x9 square.
std::array<std::array<bool, 3>, 3> minicolumn_edges(const LatinSquare& g) {
    std::array<std::array<bool, 3>, 3> edges{};
    for (int bi = 0; bi < 3; ++bi) {
        for (int sj = 0; sj < 3; ++sj) {
            std::array<std::vector<uint32_t>, 2> fams;
            int fi = 0;
            for (int s = 0; s < 3; ++s) {
                if (s == sj) continue;
                std::vector<uint32_t> fam(3, 0);
                for (int c = 0; c < 3; ++c)
                    for (int r = 0; r < 3; ++r)
                        fam[c] |= 1u << g.at(3 * bi + r, 3 * s + c);
                std::sort(fam.begin(), fam.end());
                fams[fi++] = std::move(fam);
            }
            edges[bi][sj] = fams[0] == fams[1];
        }
    }
    return edges;
}

// Conjugate labels carrying each ordered role pair (U,V) to (rows, cols), in
// family order (B,S),(S,B),(P,S),(S,P),(B,P),(P,B).
constexpr std::array<std::array<int, 3>, 6> kFamilyConjugates = {{
    {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}, {2, 0, 1},
}};

void check_rank3_ds(const LatinSquare& L) {
    if (L.n != 9 || !is_division_sudoku_standard(L))
        throw std::invalid_argument("invariants require a rank-3 standard division sudoku");
}

const std::array<std::array<int, 3>, 6>& perms3() {
    static const std::array<std::array<int, 3>, 6> p = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return p;
}

uint64_t pack(const IntercalateInvariant& inv, const std::array<int, 3>& pb,
              const std::array<int, 3>& ps, const std::array<int, 3>& pp) {
    uint64_t key = 0;
    for (int b = 0; b < 3; ++b)
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 3; ++p)
                if (inv.bits[b][s][p])
                    key |= 1ull << (pb[b] * 9 + ps[s] * 3 + pp[p]);
    return key;
}

uint64_t pack(const MinisquareInvariant& inv, const std::array<int, 3>& pb,
              const std::array<int, 3>& ps, const std::array<int, 3>& pp) {
    // Families in order; source/target label permutations per family.
    const std::array<int, 3>* fam_perms[6][2] = {
        {&pb, &ps}, {&ps, &pb}, {&pp, &ps}, {&ps, &pp}, {&pb, &pp}, {&pp, &pb}};
    uint64_t key = 0;
    for (int f = 0; f < 6; ++f)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (inv.edges[f][i][j])
                    key |= 1ull << (f * 9 + (*fam_perms[f][0])[i] * 3 + (*fam_perms[f][1])[j]);
    return key;
}

template <typename Inv>
uint64_t min_key(const Inv& inv) {
    uint64_t best = ~0ull;
    for (const auto& pb : perms3())
        for (const auto& ps : perms3())
            for (const auto& pp : perms3())
                best = std::min(best, pack(inv, pb, ps, pp));
    return best;
}

}  // namespace

IntercalateInvariant intercalate_invariant(const LatinSquare& L) {
    check_rank3_ds(L);
    IntercalateInvariant inv;
    for (const auto& I : find_intercalates(L)) {
        inv.bits[profile(I.rows[0], I.rows[1])][profile(I.cols[0], I.cols[1])]
                [profile(I.symbols[0], I.symbols[1])] = true;
    }
    return inv;
}

MinisquareInvariant minisquare_invariant(const LatinSquare& L) {
    check_rank3_ds(L);
    MinisquareInvariant inv;
    for (int f = 0; f < 6; ++f)
        inv.edges[f] = minicolumn_edges(conjugate(L, ConjugateLabel{kFamilyConjugates[f]}));
    return inv;
}

bool invariants_equivalent(const IntercalateInvariant& a, const IntercalateInvariant& b) {
    return canonical_key(a) == canonical_key(b);
}

bool invariants_equivalent(const MinisquareInvariant& a, const MinisquareInvariant& b) {
    return canonical_key(a) == canonical_key(b);
}

uint64_t canonical_key(const IntercalateInvariant& inv) { return min_key(inv); }
uint64_t canonical_key(const MinisquareInvariant& inv) { return min_key(inv); }

std::string render(const IntercalateInvariant& inv) {
    std::ostringstream out;
    bool first = true;
    for (int b = 0; b < 3; ++b)
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 3; ++p)
                if (inv.bits[b][s][p]) {
                    if (!first) out << ' ';
                    first = false;
                    out << "(B" << b + 1 << ",S" << s + 1 << ",P" << p + 1 << ")";
                }
    return out.str();
}

std::string render(const MinisquareInvariant& inv) {
    // Pile-involving families print with the pile first, as in the paper's
    // figures; row/column families print row-block -> column-block.
    static const char* kSrc[6] = {"B", "S", "P", "P", "P", "P"};
    static const char* kDst[6] = {"S", "B", "S", "S", "B", "B"};
    static const bool kSwap[6] = {false, false, false, true, true, false};
    std::vector<std::string> edges;
    for (int f = 0; f < 6; ++f)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (inv.edges[f][i][j]) {
                    int s = kSwap[f] ? j : i, d = kSwap[f] ? i : j;
                    edges.push_back(std::string(kSrc[f]) + std::to_string(s + 1) + "->" +
                                    kDst[f] + std::to_string(d + 1));
                }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::ostringstream out;
    for (size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i];
    return out.str();
}

}  // namespace divsudoku
