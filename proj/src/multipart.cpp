#include "divsudoku/multipart.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "divsudoku/core.hpp"

namespace divsudoku {

namespace {

// Partition the elements of `rem` (ascending) into blocks of size m, always
// seeding a block with the smallest remaining element.
void gen_partitions(int m, std::vector<int>& rem, std::vector<int>& block_of, int next_block,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (rem.empty()) {
        emit(block_of);
        return;
    }
    int first = rem[0];
    const int k = static_cast<int>(rem.size());
    // Choose m-1 companions from rem[1..] in ascending index order.
    std::vector<int> idx(m - 1);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        std::vector<int> rest;
        rest.reserve(k - m);
        {
            std::vector<bool> used(k, false);
            used[0] = true;
            for (int i : idx) used[i] = true;
            block_of[first] = next_block;
            for (int i = 1; i < k; ++i) {
                if (used[i])
                    block_of[rem[i]] = next_block;
                else
                    rest.push_back(rem[i]);
            }
        }
        gen_partitions(m, rest, block_of, next_block + 1, emit);
        // next combination
        int i = m - 2;
        while (i >= 0 && idx[i] == k - (m - 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<SudokuPartition> partition_universe(int m) {
    std::vector<SudokuPartition> out;
    std::vector<int> rem(m * m);
    std::iota(rem.begin(), rem.end(), 0);
    std::vector<int> block_of(m * m, -1);
    gen_partitions(m, rem, block_of, 0,
                   [&](const std::vector<int>& b) { out.emplace_back(m, b); });
    return out;
}

std::vector<Permutation> standard_partition_group(int m) {
    std::vector<std::vector<int>> perms;  // all permutations of 0..m-1
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<Permutation> out;
    std::vector<int> inner_idx(m, 0);
    for (const auto& bp : perms) {
        std::fill(inner_idx.begin(), inner_idx.end(), 0);
        while (true) {
            std::vector<int> images(m * m);
            for (int x = 0; x < m * m; ++x)
                images[x] = m * bp[x / m] + perms[inner_idx[x / m]][x % m];
            out.emplace_back(std::move(images));
            int b = 0;
            while (b < m && inner_idx[b] == static_cast<int>(perms.size()) - 1) inner_idx[b++] = 0;
            if (b == m) break;
            ++inner_idx[b];
        }
    }
    return out;
}

namespace {

bool ds_tri_check(const LatinSquare& g, const std::vector<int>& bB, const std::vector<int>& bS,
                  const std::vector<int>& bP, int m) {
    const int n = m * m;
    const uint32_t full = (n >= 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    std::vector<uint32_t> s1(m * m, 0), s2(m * m, 0), s3(m * m, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int z = g.at(x, y);
            s1[bB[x] * m + bS[y]] |= 1u << z;
            s2[bB[x] * m + bP[z]] |= 1u << y;
            s3[bS[y] * m + bP[z]] |= 1u << x;
        }
    for (int i = 0; i < m * m; ++i)
        if (s1[i] != full || s2[i] != full || s3[i] != full) return false;
    return true;
}

}  // namespace

std::vector<TriPartition> tri_partitions(const LatinSquare& L) {
    if (L.n != 9) throw std::invalid_argument("tri_partitions supports order 9 only");
    // All 3-subsets of {0..8} as 9-bit masks, and for each row triple B the set
    // of column triples S such that B x S contains all nine symbols.
    std::vector<uint16_t> triples;
    for (int mask = 0; mask < 512; ++mask)
        if (std::popcount(static_cast<unsigned>(mask)) == 3)
            triples.push_back(static_cast<uint16_t>(mask));
    auto elems = [](uint16_t mask) {
        std::array<int, 3> e{};
        int i = 0;
        for (int x = 0; x < 9; ++x)
            if (mask & (1 << x)) e[i++] = x;
        return e;
    };
    std::vector<std::vector<bool>> covers(512, std::vector<bool>(512, false));
    for (uint16_t B : triples) {
        auto br = elems(B);
        for (uint16_t S : triples) {
            auto sc = elems(S);
            uint16_t syms = 0;
            for (int x : br)
                for (int y : sc) syms |= 1 << L.at(x, y);
            covers[B][S] = syms == 0x1FF;
        }
    }

    std::set<TriPartition> results;
    for (const SudokuPartition& PB : partition_universe(3)) {
        auto bblocks = PB.blocks();
        uint16_t bm[3];
        for (int i = 0; i < 3; ++i) {
            bm[i] = 0;
            for (int e : bblocks[i]) bm[i] |= 1 << e;
        }
        std::vector<uint16_t> cand;
        for (uint16_t S : triples)
            if (covers[bm[0]][S] && covers[bm[1]][S] && covers[bm[2]][S]) cand.push_back(S);
        for (uint16_t S1 : cand) {
            if (!(S1 & 1)) continue;  // block containing column 0
            uint16_t rest = 0x1FF ^ S1;
            int low = std::countr_zero(static_cast<unsigned>(rest));
            for (uint16_t S2 : cand) {
                if ((S2 & ~rest) || !(S2 & (1 << low))) continue;
                uint16_t S3 = rest ^ S2;
                if (std::find(cand.begin(), cand.end(), S3) == cand.end()) continue;
                std::vector<int> bS(9);
                for (int y = 0; y < 9; ++y) bS[y] = (S1 >> y) & 1 ? 0 : ((S2 >> y) & 1 ? 1 : 2);
                // The pile partition is forced up to the parity of the broken
                // diagonals of the top-left band x column-triple minisquare.
                auto B1 = bblocks[0];
                auto C1 = elems(S1);
                static const int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
                static const int kOdd[3][3] = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
                for (int par = 0; par < 2; ++par) {
                    std::vector<int> bP(9, -1);
                    bool ok = true;
                    for (int k = 0; k < 3 && ok; ++k)
                        for (int r = 0; r < 3; ++r) {
                            int s = L.at(B1[r], C1[par ? kOdd[k][r] : kEven[k][r]]);
                            if (bP[s] != -1) {
                                ok = false;
                                break;
                            }
                            bP[s] = k;
                        }
                    if (!ok) continue;
                    if (ds_tri_check(L, PB.block_of, bS, bP, 3)) {
                        results.insert(TriPartition{PB.canonical(),
                                                    SudokuPartition(3, bS).canonical(),
                                                    SudokuPartition(3, bP).canonical()});
                    }
                }
            }
        }
    }
    return {results.begin(), results.end()};
}

std::vector<SudokuPartition> sigma_partitions(const LatinSquare& L) {
    int m = 1;
    while (m * m < L.n) ++m;
    std::vector<SudokuPartition> out;
    for (const SudokuPartition& p : partition_universe(m))
        if (ds_tri_check(L, p.block_of, p.block_of, p.block_of, m)) out.push_back(p);
    return out;
}

SynchronizeResult synchronize(const LatinSquare& L) {
    if (L.n != 9) throw std::invalid_argument("synchronize supports order 9 only");
    const auto tps = tri_partitions(L);
    const auto G0 = standard_partition_group(3);
    const int nt = static_cast<int>(tps.size());
    const int ng = static_cast<int>(G0.size());

    // Distinct row partitions among the tri-partitions, as small ids.
    std::vector<SudokuPartition> ybs;
    std::vector<int> yb_id(nt);
    for (int t = 0; t < nt; ++t) {
        auto it = std::find(ybs.begin(), ybs.end(), tps[t].rows);
        yb_id[t] = static_cast<int>(it - ybs.begin());
        if (it == ybs.end()) ybs.push_back(tps[t].rows);
    }

    // For each tri-partition t: which g carry Y^S_t to Y^B_t, which h carry
    // Y^P_t to Y^B_t.
    std::vector<std::vector<int>> g_of_t(nt), h_of_t(nt);
    for (int t = 0; t < nt; ++t) {
        for (int gi = 0; gi < ng; ++gi) {
            if (tps[t].syms.mapped_by(G0[gi]) == tps[t].rows) g_of_t[t].push_back(gi);
            if (tps[t].cols.mapped_by(G0[gi]) == tps[t].rows) h_of_t[t].push_back(gi);
        }
    }
    // Note: tri-partitions are stored (rows, cols, syms); the synchronizing
    // pair acts with g on the column partition and h on the symbol partition.
    // We follow the storage order: g acts on syms here, h on cols; the witness
    // below matches this convention.
    std::vector<std::vector<int>> t_of_g(ng);
    for (int t = 0; t < nt; ++t)
        for (int gi : g_of_t[t]) t_of_g[gi].push_back(t);

    int best = 0, best_g = -1, best_h = -1;
    std::vector<uint32_t> acc(ng);
    for (int gi = 0; gi < ng; ++gi) {
        if (t_of_g[gi].empty()) continue;
        std::fill(acc.begin(), acc.end(), 0);
        for (int t : t_of_g[gi])
            for (int hi : h_of_t[t]) acc[hi] |= 1u << yb_id[t];
        for (int hi = 0; hi < ng; ++hi) {
            int v = std::popcount(acc[hi]);
            if (v > best) {
                best = v;
                best_g = gi;
                best_h = hi;
            }
        }
    }

    SynchronizeResult res;
    res.sigma = best;
    if (best_g >= 0) {
        // Witness: relabel symbols by g and columns by h; then the selected
        // tri-partitions become synchronized.
        const Permutation& g = G0[best_g];
        const Permutation hinv = G0[best_h].inverse();
        LatinSquare W(9);
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) W.at(x, y) = g(L.at(x, hinv(y)));
        res.square = W;
        res.partitions = sigma_partitions(W);
    } else {
        res.square = L;
    }
    return res;
}

bool is_affine_collection(const std::vector<SudokuPartition>& partitions) {
    for (size_t i = 0; i < partitions.size(); ++i)
        for (size_t j = i + 1; j < partitions.size(); ++j)
            for (const auto& A : partitions[i].blocks())
                for (const auto& B : partitions[j].blocks()) {
                    int common = 0;
                    for (int a : A)
                        if (std::find(B.begin(), B.end(), a) != B.end()) ++common;
                    if (common != 1) return false;
                }
    return true;
}

std::vector<SudokuPartition> sigma_partitions_rank4(const LatinSquare& L, int threads) {
    if (L.n != 16) throw std::invalid_argument("sigma_partitions_rank4 expects order 16");
    // Split the scan on the block containing element 0: C(15,3) = 455 tasks.
    std::vector<std::array<int, 3>> first_blocks;
    for (int a = 1; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            for (int c = b + 1; c < 16; ++c) first_blocks.push_back({a, b, c});

    std::vector<std::vector<SudokuPartition>> found(first_blocks.size());
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < static_cast<int>(first_blocks.size());
             i = next.fetch_add(1)) {
            std::vector<int> block_of(16, -1);
            block_of[0] = 0;
            for (int e : first_blocks[i]) block_of[e] = 0;
            std::vector<int> rem;
            for (int e = 1; e < 16; ++e)
                if (block_of[e] < 0) rem.push_back(e);
            gen_partitions(4, rem, block_of, 1, [&](const std::vector<int>& b) {
                if (ds_tri_check(L, b, b, b, 4)) found[i].emplace_back(4, b);
            });
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::max(1, threads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<SudokuPartition> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace divsudoku
