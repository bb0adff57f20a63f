#include "divsudoku/core.hpp"

#include <algorithm>

namespace divsudoku {

LatinSquare conjugate(const LatinSquare& L, const ConjugateLabel& theta) {
    LatinSquare out(L.n);
    for (int x = 0; x < L.n; ++x) {
        for (int y = 0; y < L.n; ++y) {
            const int t[3] = {x, y, L.at(x, y)};
            out.at(t[theta.theta[0]], t[theta.theta[1]]) = t[theta.theta[2]];
        }
    }
    return out;
}

LatinSquare apply_isotopism(const LatinSquare& L, const Isotopism& iso) {
    if (iso.alpha.degree() != L.n || iso.beta.degree() != L.n || iso.gamma.degree() != L.n)
        throw std::invalid_argument("isotopism degree mismatch");
    LatinSquare out(L.n);
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            out.at(iso.alpha(x), iso.beta(y)) = iso.gamma(L.at(x, y));
    return out;
}

DivisionTables division_tables(const LatinSquare& L) {
    DivisionTables d{LatinSquare(L.n), LatinSquare(L.n)};
    for (int x = 0; x < L.n; ++x) {
        for (int y = 0; y < L.n; ++y) {
            int z = L.at(x, y);
            d.rdiv.at(z, y) = x;  // rdiv(a,b) = c iff c*b = a
            d.ldiv.at(x, z) = y;  // ldiv(a,b) = c iff a*c = b
        }
    }
    return d;
}

namespace {

// Generic slice check: for every (block(a), block(b)) pair over coordinates
// (a,b) of the orthogonal array, the third coordinate covers everything.
bool slices_cover(const LatinSquare& L, const SudokuPartition& pa, const SudokuPartition& pb,
                  int which) {  // which: 0 = (row,col)->sym, 1 = (row,sym)->col, 2 = (col,sym)->row
    const int n = L.n, m = pa.rank;
    const uint32_t full = (n >= 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    std::vector<uint32_t> seen(m * m, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int z = L.at(x, y);
            int a, b, c;
            switch (which) {
                case 0: a = x; b = y; c = z; break;
                case 1: a = x; b = z; c = y; break;
                default: a = y; b = z; c = x; break;
            }
            seen[pa.block_of[a] * m + pb.block_of[b]] |= 1u << c;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [&](uint32_t v) { return v == full; });
}

}  // namespace

bool is_sudoku(const LatinSquare& L, const TriPartition& tri) {
    if (tri.rows.rank * tri.rows.rank != L.n) throw std::invalid_argument("rank mismatch");
    return slices_cover(L, tri.rows, tri.cols, 0);
}

bool is_division_sudoku(const LatinSquare& L, const TriPartition& tri) {
    if (tri.rows.rank * tri.rows.rank != L.n) throw std::invalid_argument("rank mismatch");
    return slices_cover(L, tri.rows, tri.cols, 0) &&
           slices_cover(L, tri.rows, tri.syms, 1) &&
           slices_cover(L, tri.cols, tri.syms, 2);
}

bool is_division_sudoku_standard(const LatinSquare& L) {
    int m = 1;
    while (m * m < L.n) ++m;
    return is_division_sudoku(L, standard_tri_partition(m));
}

bool shreds(const Permutation& theta, const SudokuPartition& p) {
    if (theta.degree() != p.size()) throw std::invalid_argument("degree mismatch");
    const int m = p.rank;
    std::vector<int> count(m * m, 0);
    for (int e = 0; e < p.size(); ++e)
        ++count[p.block_of[e] * m + p.block_of[theta(e)]];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

bool is_division_sudoku_shred(const LatinSquare& L, const TriPartition& tri) {
    if (!tri.synchronized_())
        throw std::invalid_argument("shredding characterization needs a synchronized tri-partition");
    const SudokuPartition& p = tri.rows;
    const int n = L.n;
    auto d = division_tables(L);
    for (int x = 0; x < n; ++x) {
        std::vector<int> left(n), right(n), dx(n);
        for (int y = 0; y < n; ++y) {
            left[y] = L.at(x, y);       // L_x(y) = x*y
            right[y] = L.at(y, x);      // R_x(y) = y*x
            dx[y] = d.rdiv.at(x, y);    // D_x(y) = x/y
        }
        if (!shreds(Permutation(left), p) || !shreds(Permutation(right), p) ||
            !shreds(Permutation(dx), p))
            return false;
    }
    return true;
}

long long count_associative_triples(const LatinSquare& L) {
    long long count = 0;
    const int n = L.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (L.at(x, L.at(y, z)) == L.at(L.at(x, y), z)) ++count;
    return count;
}

bool is_idempotent(const LatinSquare& L) {
    for (int x = 0; x < L.n; ++x)
        if (L.at(x, x) != x) return false;
    return true;
}

std::pair<LatinSquare, Isotopism> make_idempotent(const LatinSquare& L) {
    if (L.n != 9) throw std::invalid_argument("make_idempotent expects rank 3");
    for (int x = 0; x < 3; ++x)
        if (L.at(x, x) != x) throw std::invalid_argument("block-1 diagonal must read 1,2,3");
    // Within the diagonal minisquare of block b, the symbols of block b form a
    // transversal; row and column moves within the block place them on the
    // diagonal in symbol order.
    std::vector<int> alpha(9), beta(9);
    for (int i = 0; i < 9; ++i) alpha[i] = beta[i] = i;
    for (int b = 1; b < 3; ++b) {
        for (int r = 3 * b; r < 3 * b + 3; ++r) {
            for (int c = 3 * b; c < 3 * b + 3; ++c) {
                int s = L.at(r, c);
                if (s / 3 == b) {
                    // Cell (r,c) must land at (s,s).
                    alpha[r] = s;
                    beta[c] = s;
                }
            }
        }
    }
    Isotopism iso{Permutation(alpha), Permutation(beta), Permutation::identity(9)};
    if (!iso.alpha.is_valid() || !iso.beta.is_valid())
        throw std::invalid_argument("input is not a template extension");
    LatinSquare out = apply_isotopism(L, iso);
    return {out, iso};
}

bool is_ds_isotopism(const Isotopism& iso, int rank) {
    auto preserves = [rank](const Permutation& p) {
        for (int b = 0; b < rank; ++b) {
            int target = p(rank * b) / rank;
            for (int i = 1; i < rank; ++i)
                if (p(rank * b + i) / rank != target) return false;
        }
        return true;
    };
    return preserves(iso.alpha) && preserves(iso.beta) && preserves(iso.gamma);
}

}  // namespace divsudoku
