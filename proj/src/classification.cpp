#include "divsudoku/classification.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "divsudoku/core.hpp"
#include "divsudoku/enumeration.hpp"
#include "divsudoku/invariants.hpp"

namespace divsudoku {

namespace {

int blk(int x) { return x / 3; }

bool is_block_preserving_perm(const std::vector<int>& p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < 9; ++i)
        if (s[i] != i) return false;
    for (int b = 0; b < 3; ++b)
        if (blk(p[3 * b]) != blk(p[3 * b + 1]) || blk(p[3 * b]) != blk(p[3 * b + 2]))
            return false;
    return true;
}

// Filled cells of the enumeration template, -1 where empty.
const std::array<int, 81>& template_cells() {
    static const std::array<int, 81> t = [] {
        std::array<int, 81> a{};
        auto T = template_square();
        std::copy(T.cells.begin(), T.cells.end(), a.begin());
        return a;
    }();
    return t;
}

// Enumerate the ds-isotopism images of a template extension that again extend
// the template, driven by the 9*2 x 9*2 = 324 parameter tuples fixing the
// preimages of two rows and two columns of block 1. Calls fn(image, iso) for
// every chased candidate that passes the partition-preservation checks; fn
// returns true to stop early.
template <typename Fn>
void for_each_template_image(const LatinSquare& g, Fn&& fn) {
    const auto& T = template_cells();
    auto d = division_tables(g);
    for (int ai1 = 0; ai1 < 9; ++ai1) {
        for (int ai2 = 3 * blk(ai1); ai2 < 3 * blk(ai1) + 3; ++ai2) {
            if (ai2 == ai1) continue;
            int ai3 = 3 * blk(ai1) + (0 + 1 + 2) - (ai1 % 3) - (ai2 % 3);
            const int ainv[3] = {ai1, ai2, ai3};
            for (int bi1 = 0; bi1 < 9; ++bi1) {
                for (int bi2 = 3 * blk(bi1); bi2 < 3 * blk(bi1) + 3; ++bi2) {
                    if (bi2 == bi1) continue;
                    int bi3 = 3 * blk(bi1) + 3 - (bi1 % 3) - (bi2 % 3);
                    const int binv[3] = {bi1, bi2, bi3};
                    std::vector<int> ginv(9, -1);
                    for (int x = 0; x < 3; ++x)
                        for (int y = 0; y < 3; ++y)
                            ginv[T[x * 9 + y]] = g.at(ainv[x], binv[y]);
                    std::vector<int> binvf(9, -1), ainvf(9, -1);
                    for (int y = 0; y < 3; ++y) binvf[y] = binv[y];
                    for (int y = 3; y < 9; ++y)
                        for (int x = 0; x < 3; ++x)
                            if (T[x * 9 + y] >= 0) {
                                binvf[y] = d.ldiv.at(ainv[x], ginv[T[x * 9 + y]]);
                                break;
                            }
                    for (int x = 0; x < 3; ++x) ainvf[x] = ainv[x];
                    for (int x = 3; x < 9; ++x)
                        for (int y = 0; y < 3; ++y)
                            if (T[x * 9 + y] >= 0) {
                                ainvf[x] = d.rdiv.at(ginv[T[x * 9 + y]], binvf[y]);
                                break;
                            }
                    if (!is_block_preserving_perm(ainvf) || !is_block_preserving_perm(binvf) ||
                        !is_block_preserving_perm(ginv))
                        continue;
                    std::vector<int> gam(9);
                    for (int z = 0; z < 9; ++z) gam[ginv[z]] = z;
                    LatinSquare q2(9);
                    for (int x = 0; x < 9; ++x)
                        for (int y = 0; y < 9; ++y)
                            q2.at(x, y) = gam[g.at(ainvf[x], binvf[y])];
                    Isotopism iso{Permutation(ainvf).inverse(), Permutation(binvf).inverse(),
                                  Permutation(gam)};
                    if (fn(q2, iso)) return;
                }
            }
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

ClassPartition build_partition(const std::vector<LatinSquare>& inputs, UnionFind& uf) {
    const int n = static_cast<int>(inputs.size());
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);

    // Order classes by their lexicographically minimal member.
    std::vector<std::pair<const LatinSquare*, std::vector<int>>> classes;
    for (auto& [root, members] : by_root) {
        const LatinSquare* rep = &inputs[members[0]];
        for (int m : members)
            if (inputs[m] < *rep) rep = &inputs[m];
        classes.emplace_back(rep, std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return *a.first < *b.first; });

    ClassPartition out;
    out.class_of.assign(n, -1);
    for (int cid = 0; cid < static_cast<int>(classes.size()); ++cid) {
        out.representatives.push_back(*classes[cid].first);
        out.members.push_back(classes[cid].second);
        for (int m : classes[cid].second) out.class_of[m] = cid;
        ++out.size_histogram[static_cast<int>(classes[cid].second.size())];
    }
    return out;
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

std::optional<Isotopism> ds_isotopism_between_template_extensions(const LatinSquare& Q1,
                                                                  const LatinSquare& Q2) {
    std::optional<Isotopism> found;
    for_each_template_image(Q1, [&](const LatinSquare& img, const Isotopism& iso) {
        if (img == Q2) {
            found = iso;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<Isotopism> ds_isotopism_general(const LatinSquare& Q1, const LatinSquare& Q2,
                                              int rank) {
    if (rank != 3 || Q1.n != 9 || Q2.n != 9)
        throw std::invalid_argument("ds_isotopism_general supports rank 3 only");
    auto d2 = division_tables(Q2);
    for (int a1 = 0; a1 < 9; ++a1) {
        for (int a2 = 3 * blk(a1); a2 < 3 * blk(a1) + 3; ++a2) {
            if (a2 == a1) continue;
            int a3 = 3 * blk(a1) + 3 - (a1 % 3) - (a2 % 3);
            const int al[3] = {a1, a2, a3};
            for (int b1 = 0; b1 < 9; ++b1) {
                for (int b2 = 3 * blk(b1); b2 < 3 * blk(b1) + 3; ++b2) {
                    if (b2 == b1) continue;
                    int b3 = 3 * blk(b1) + 3 - (b1 % 3) - (b2 % 3);
                    const int be[3] = {b1, b2, b3};
                    std::vector<int> gam(9, -1);
                    for (int x = 0; x < 3; ++x)
                        for (int y = 0; y < 3; ++y)
                            gam[Q1.at(x, y)] = Q2.at(al[x], be[y]);
                    if (!is_block_preserving_perm(gam)) continue;
                    std::vector<int> alf(9, -1), bef(9, -1);
                    for (int x = 0; x < 3; ++x) alf[x] = al[x];
                    for (int y = 0; y < 3; ++y) bef[y] = be[y];
                    for (int x = 3; x < 9; ++x) alf[x] = d2.rdiv.at(gam[Q1.at(x, 0)], be[0]);
                    for (int y = 3; y < 9; ++y) bef[y] = d2.ldiv.at(al[0], gam[Q1.at(0, y)]);
                    if (!is_block_preserving_perm(alf) || !is_block_preserving_perm(bef)) continue;
                    bool good = true;
                    for (int x = 0; x < 9 && good; ++x)
                        for (int y = 0; y < 9; ++y)
                            if (Q2.at(alf[x], bef[y]) != gam[Q1.at(x, y)]) {
                                good = false;
                                break;
                            }
                    if (good)
                        return Isotopism{Permutation(alf), Permutation(bef), Permutation(gam)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Isotopism> isotopism_general(const LatinSquare& Q1, const LatinSquare& Q2) {
    const int n = Q1.n;
    if (n != Q2.n) return std::nullopt;
    // inv1[r][s] = column of symbol s in row r of Q1
    std::vector<std::vector<int>> inv1(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv1[r][Q1.at(r, c)] = c;
    std::vector<int> row2sym0(n);
    for (int x = 0; x < n; ++x) row2sym0[x] = Q2.at(x, 0);

    std::vector<int> gam(n), ginv(n), binv(n), colmap(n), ainv(n);
    for (int r0 = 0; r0 < n; ++r0) {
        const std::vector<int>& L1r0inv = inv1[r0];
        std::iota(gam.begin(), gam.end(), 0);
        do {
            for (int i = 0; i < n; ++i) ginv[gam[i]] = i;
            // beta^-1(y): column of gamma^-1(Q2(0,y)) in row r0 of Q1
            for (int y = 0; y < n; ++y) binv[y] = L1r0inv[ginv[Q2.at(0, y)]];
            int c0 = binv[0];
            for (int r = 0; r < n; ++r) colmap[Q1.at(r, c0)] = r;
            for (int x = 0; x < n; ++x) ainv[x] = colmap[ginv[row2sym0[x]]];
            bool ok = true;
            for (int x = 1; x < n && ok; ++x) {
                const int* gr1 = &Q1.cells[ainv[x] * n];
                const int* gr2 = &Q2.cells[x * n];
                for (int y = 1; y < n; ++y)
                    if (gr2[y] != gam[gr1[binv[y]]]) {
                        ok = false;
                        break;
                    }
            }
            if (ok)
                return Isotopism{Permutation(ainv).inverse(), Permutation(binv).inverse(),
                                 Permutation(gam)};
        } while (std::next_permutation(gam.begin(), gam.end()));
    }
    return std::nullopt;
}

ClassPartition ds_classes(const std::vector<LatinSquare>& extensions, int threads) {
    const int n = static_cast<int>(extensions.size());
    // Index lookup by cell vector (the inputs need not be sorted).
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index.emplace(extensions[i].cells, i);

    std::vector<std::vector<std::pair<int, int>>> edges(std::max(1, n));
    parallel_for(n, threads, [&](int i) {
        for_each_template_image(extensions[i], [&](const LatinSquare& img, const Isotopism&) {
            auto it = index.find(img.cells);
            if (it != index.end() && it->second != i) edges[i].emplace_back(i, it->second);
            return false;
        });
    });
    UnionFind uf(n);
    for (const auto& bucket : edges)
        for (auto [a, b] : bucket) uf.unite(a, b);
    return build_partition(extensions, uf);
}

ClassPartition main_ds_classes(const std::vector<LatinSquare>& reps, int threads) {
    const int n = static_cast<int>(reps.size());
    // Conjugation permutes the band/stack/pile roles, so group by the sorted
    // multiset of intercalate-invariant keys over all six conjugates.
    std::vector<std::array<uint64_t, 6>> keys(n);
    parallel_for(n, threads, [&](int i) {
        for (int t = 0; t < 6; ++t)
            keys[i][t] =
                canonical_key(intercalate_invariant(conjugate(reps[i], ConjugateLabel::all()[t])));
        std::sort(keys[i].begin(), keys[i].end());
    });
    std::map<std::array<uint64_t, 6>, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[keys[i]].push_back(i);

    UnionFind uf(n);
    for (const auto& [key, ks] : groups) {
        for (size_t i = 0; i < ks.size(); ++i) {
            for (size_t j = i + 1; j < ks.size(); ++j) {
                if (uf.find(ks[i]) == uf.find(ks[j])) continue;
                for (const auto& th : ConjugateLabel::all()) {
                    if (ds_isotopism_general(reps[ks[i]], conjugate(reps[ks[j]], th), 3)) {
                        uf.unite(ks[i], ks[j]);
                        break;
                    }
                }
            }
        }
    }
    return build_partition(reps, uf);
}

ClassPartition isotopism_classes(const std::vector<LatinSquare>& reps, int threads) {
    const int n = static_cast<int>(reps.size());
    std::vector<IsotopyFingerprint> fp(n);
    parallel_for(n, threads, [&](int i) { fp[i] = isotopy_fingerprint(reps[i]); });
    std::map<IsotopyFingerprint, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[fp[i]].push_back(i);

    UnionFind uf(n);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [key, ks] : groups)
        for (size_t i = 0; i < ks.size(); ++i)
            for (size_t j = i + 1; j < ks.size(); ++j) pairs.emplace_back(ks[i], ks[j]);
    std::vector<char> linked(pairs.size(), 0);
    parallel_for(static_cast<int>(pairs.size()), threads, [&](int i) {
        linked[i] = isotopism_general(reps[pairs[i].first], reps[pairs[i].second]).has_value();
    });
    for (size_t i = 0; i < pairs.size(); ++i)
        if (linked[i]) uf.unite(pairs[i].first, pairs[i].second);
    return build_partition(reps, uf);
}

namespace {

std::vector<int> cycle_type(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::vector<int> t;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<std::pair<std::vector<int>, int>> row_product_types(const LatinSquare& g) {
    const int n = g.n;
    std::vector<std::vector<int>> inv(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r][g.at(r, c)] = c;
    std::map<std::vector<int>, int> counts;
    std::vector<int> p(n);
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2) {
            if (r1 == r2) continue;
            for (int s = 0; s < n; ++s) p[s] = g.at(r2, inv[r1][s]);  // L_{r2} o L_{r1}^-1
            ++counts[cycle_type(p)];
        }
    return {counts.begin(), counts.end()};
}

}  // namespace

bool IsotopyFingerprint::operator<(const IsotopyFingerprint& o) const {
    return std::tie(intercalates, row_product_types, col_product_types) <
           std::tie(o.intercalates, o.row_product_types, o.col_product_types);
}

IsotopyFingerprint isotopy_fingerprint(const LatinSquare& L) {
    IsotopyFingerprint fp;
    fp.intercalates = static_cast<int>(find_intercalates(L).size());
    fp.row_product_types = row_product_types(L);
    fp.col_product_types = row_product_types(conjugate(L, ConjugateLabel{ConjugateLabel::kTranspose}));
    return fp;
}

bool is_isotopic_to_group(const LatinSquare& L) {
    const int n = L.n;
    std::vector<int> rowof(n), colof(n);
    for (int r = 0; r < n; ++r) rowof[L.at(r, 0)] = r;
    for (int c = 0; c < n; ++c) colof[L.at(0, c)] = c;
    std::vector<std::vector<int>> loop(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) loop[x][y] = L.at(rowof[x], colof[y]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (loop[loop[x][y]][z] != loop[x][loop[y][z]]) return false;
    return true;
}

namespace {

bool has_4_cycle(const std::vector<int>& p) {
    auto t = cycle_type(p);
    return std::find(t.begin(), t.end(), 4) != t.end();
}

}  // namespace

bool every_left_translation_has_4_cycle(const LatinSquare& L) {
    std::vector<int> p(L.n);
    for (int x = 0; x < L.n; ++x) {
        for (int y = 0; y < L.n; ++y) p[y] = L.at(x, y);
        if (!has_4_cycle(p)) return false;
    }
    return true;
}

bool any_right_translation_has_4_cycle(const LatinSquare& L) {
    std::vector<int> p(L.n);
    for (int x = 0; x < L.n; ++x) {
        for (int y = 0; y < L.n; ++y) p[y] = L.at(y, x);
        if (has_4_cycle(p)) return true;
    }
    return false;
}

}  // namespace divsudoku
