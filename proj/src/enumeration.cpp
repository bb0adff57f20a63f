#include "divsudoku/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "divsudoku/io.hpp"

namespace divsudoku {

PartialLatinSquare template_square() {
    return partial_from_digits(corpus::kTemplate);
}

bool extends_template(const LatinSquare& L) {
    if (L.n != 9) return false;
    auto T = template_square();
    for (int i = 0; i < 81; ++i)
        if (T.cells[i] >= 0 && L.cells[i] != T.cells[i]) return false;
    return true;
}

namespace {

// Backtracking state for rank-3 standard division sudokus. The division
// conditions reduce to: latin rows/columns, all symbols distinct per
// minisquare, and the symbol blocks within every minirow and minicolumn
// pairwise distinct (one symbol per pile in each).
struct Search {
    std::array<uint16_t, 9> rowmask{}, colmask{};
    std::array<uint16_t, 9> boxmask{};           // box index r/3*3 + c/3
    std::array<std::array<uint8_t, 3>, 9> mrow{};  // [row][column block] -> pile mask
    std::array<std::array<uint8_t, 3>, 9> mcol{};  // [col][row block] -> pile mask
    std::array<int, 81> grid{};
    std::vector<int> empties;
    std::vector<LatinSquare>* out = nullptr;

    explicit Search(const PartialLatinSquare& start) {
        grid.fill(-1);
        for (int r = 0; r < 9; ++r) {
            for (int c = 0; c < 9; ++c) {
                int s = start.at(r, c);
                if (s < 0) {
                    empties.push_back(r * 9 + c);
                } else {
                    place(r, c, s);
                }
            }
        }
    }

    void place(int r, int c, int s) {
        grid[r * 9 + c] = s;
        rowmask[r] |= 1 << s;
        colmask[c] |= 1 << s;
        boxmask[(r / 3) * 3 + c / 3] |= 1 << s;
        mrow[r][c / 3] |= 1 << (s / 3);
        mcol[c][r / 3] |= 1 << (s / 3);
    }
    void remove(int r, int c, int s) {
        grid[r * 9 + c] = -1;
        rowmask[r] ^= 1 << s;
        colmask[c] ^= 1 << s;
        boxmask[(r / 3) * 3 + c / 3] ^= 1 << s;
        mrow[r][c / 3] ^= 1 << (s / 3);
        mcol[c][r / 3] ^= 1 << (s / 3);
    }

    uint16_t candidates(int r, int c) const {
        uint16_t avail =
            static_cast<uint16_t>(~(rowmask[r] | colmask[c] | boxmask[(r / 3) * 3 + c / 3]) & 0x1FF);
        uint16_t ok = 0;
        uint16_t rem = avail;
        while (rem) {
            int s = std::countr_zero(rem);
            rem &= rem - 1;
            uint8_t pile = 1 << (s / 3);
            if (!(mrow[r][c / 3] & pile) && !(mcol[c][r / 3] & pile)) ok |= 1 << s;
        }
        return ok;
    }

    void run(size_t depth) {
        if (depth == empties.size()) {
            LatinSquare L(9);
            std::copy(grid.begin(), grid.end(), L.cells.begin());
            out->push_back(std::move(L));
            return;
        }
        int cell = empties[depth], r = cell / 9, c = cell % 9;
        uint16_t cand = candidates(r, c);
        while (cand) {
            int s = std::countr_zero(cand);
            cand &= cand - 1;
            place(r, c, s);
            run(depth + 1);
            remove(r, c, s);
        }
    }
};

}  // namespace

std::vector<LatinSquare> enumerate_extensions(int threads) {
    PartialLatinSquare start = template_square();
    Search probe(start);
    std::vector<LatinSquare> results;

    if (threads <= 1 || probe.empties.size() < 2) {
        probe.out = &results;
        probe.run(0);
    } else {
        // Split on the choices for the first two empty cells; each task owns a
        // private search state, results are concatenated in task order.
        int cell0 = probe.empties[0], cell1 = probe.empties[1];
        std::vector<std::pair<int, int>> tasks;
        {
            Search s(start);
            int r0 = cell0 / 9, c0 = cell0 % 9;
            uint16_t cand0 = s.candidates(r0, c0);
            while (cand0) {
                int s0 = std::countr_zero(cand0);
                cand0 &= cand0 - 1;
                s.place(r0, c0, s0);
                uint16_t cand1 = s.candidates(cell1 / 9, cell1 % 9);
                while (cand1) {
                    int s1 = std::countr_zero(cand1);
                    cand1 &= cand1 - 1;
                    tasks.emplace_back(s0, s1);
                }
                s.remove(r0, c0, s0);
            }
        }
        std::vector<std::vector<LatinSquare>> buckets(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                Search s(start);
                s.place(cell0 / 9, cell0 % 9, tasks[i].first);
                s.place(cell1 / 9, cell1 % 9, tasks[i].second);
                s.out = &buckets[i];
                s.run(2);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& b : buckets)
            results.insert(results.end(), b.begin(), b.end());
    }
    std::sort(results.begin(), results.end());
    return results;
}

long long total_standard_count(long long extension_count) {
    long long factor = 1;
    for (int i = 0; i < 11; ++i) factor *= 2;
    for (int i = 0; i < 8; ++i) factor *= 3;
    return factor * extension_count;  // 13436928 per template representative
}

namespace {

bool is_symbol_block(int a, int b, int c) {
    return a / 3 == b / 3 && b / 3 == c / 3;
}

}  // namespace

std::pair<LatinSquare, Isotopism> canonicalize_to_template(const LatinSquare& L) {
    if (L.n != 9 || !is_division_sudoku_standard(L))
        throw std::invalid_argument("canonicalize_to_template expects a rank-3 standard division sudoku");

    LatinSquare g = L;
    std::vector<int> alpha(9), beta(9), gamma(9);
    for (int i = 0; i < 9; ++i) alpha[i] = beta[i] = gamma[i] = i;

    auto apply_cols = [&](const std::vector<int>& bmap) {  // old col -> new col
        LatinSquare ng(9);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) ng.at(r, bmap[c]) = g.at(r, c);
        g = ng;
        for (int c = 0; c < 9; ++c) beta[c] = bmap[beta[c]];
    };
    auto apply_rows = [&](const std::vector<int>& amap) {
        LatinSquare ng(9);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) ng.at(amap[r], c) = g.at(r, c);
        g = ng;
        for (int r = 0; r < 9; ++r) alpha[r] = amap[alpha[r]];
    };

    // (a) Exactly one of the diagonal / antidiagonal of B1 n S1 carries a
    // symbol block; the column swap (2,3) converts the antidiagonal case.
    if (!is_symbol_block(g.at(0, 0), g.at(1, 1), g.at(2, 2))) {
        if (!is_symbol_block(g.at(0, 2), g.at(1, 1), g.at(2, 0)))
            throw std::logic_error("top-left minisquare has no block diagonal");
        apply_cols({0, 2, 1, 3, 4, 5, 6, 7, 8});
    }
    // Relabel symbols: broken diagonal d of the minisquare becomes block d,
    // ordered by row.
    {
        std::vector<int> gmap(9);
        for (int d = 0; d < 3; ++d)
            for (int r = 0; r < 3; ++r) gmap[g.at(r, (r + d) % 3)] = 3 * d + r;
        for (int& s : g.cells) s = gmap[s];
        for (int s = 0; s < 9; ++s) gamma[s] = gmap[gamma[s]];
    }
    // (b) Within stacks 2 and 3, the block-1 symbols form a transversal of
    // each minisquare of band 1; move it onto the diagonal.
    {
        std::vector<int> bmap(9);
        for (int c = 0; c < 9; ++c) bmap[c] = c;
        for (int st = 1; st < 3; ++st)
            for (int r = 0; r < 3; ++r)
                for (int c = 3 * st; c < 3 * st + 3; ++c)
                    if (g.at(r, c) < 3) bmap[c] = 3 * st + r;
        apply_cols(bmap);
        if (g.at(0, 3) == 2)  // wrong block order: swap stacks 2 and 3
            apply_cols({0, 1, 2, 6, 7, 8, 3, 4, 5});
    }
    // (c) Dually for bands 2 and 3 using stack 1.
    {
        std::vector<int> amap(9);
        for (int r = 0; r < 9; ++r) amap[r] = r;
        for (int bd = 1; bd < 3; ++bd)
            for (int r = 3 * bd; r < 3 * bd + 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (g.at(r, c) < 3) amap[r] = 3 * bd + c;
        apply_rows(amap);
        if (g.at(3, 0) == 2)
            apply_rows({0, 1, 2, 6, 7, 8, 3, 4, 5});
    }

    Isotopism iso{Permutation(alpha), Permutation(beta), Permutation(gamma)};
    if (!extends_template(g)) throw std::logic_error("canonicalization failed");
    return {g, iso};
}

}  // namespace divsudoku
