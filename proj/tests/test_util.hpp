// Shared helpers for the test binaries: deterministic random latin squares and
// random partition-preserving isotopisms.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "divsudoku/types.hpp"

namespace testutil {

// Random latin square of order n by randomized backtracking completion.
inline divsudoku::LatinSquare random_latin_square(int n, std::mt19937& rng) {
    divsudoku::LatinSquare L(n);
    std::vector<uint32_t> rowmask(n, 0), colmask(n, 0);
    std::function<bool(int)> fill = [&](int cell) -> bool {
        if (cell == n * n) return true;
        int r = cell / n, c = cell % n;
        std::vector<int> cand;
        for (int s = 0; s < n; ++s)
            if (!((rowmask[r] >> s) & 1) && !((colmask[c] >> s) & 1)) cand.push_back(s);
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int s : cand) {
            L.at(r, c) = s;
            rowmask[r] |= 1u << s;
            colmask[c] |= 1u << s;
            if (fill(cell + 1)) return true;
            rowmask[r] &= ~(1u << s);
            colmask[c] &= ~(1u << s);
        }
        return false;
    };
    fill(0);
    return L;
}

// Random permutation of 0..m^2-1 preserving the standard rank-m partition.
inline divsudoku::Permutation random_block_permutation(int m, std::mt19937& rng) {
    std::vector<int> blocks(m);
    std::iota(blocks.begin(), blocks.end(), 0);
    std::shuffle(blocks.begin(), blocks.end(), rng);
    std::vector<int> images(m * m);
    for (int b = 0; b < m; ++b) {
        std::vector<int> inner(m);
        std::iota(inner.begin(), inner.end(), 0);
        std::shuffle(inner.begin(), inner.end(), rng);
        for (int i = 0; i < m; ++i) images[m * b + i] = m * blocks[b] + inner[i];
    }
    return divsudoku::Permutation(images);
}

inline divsudoku::Isotopism random_ds_isotopism(int m, std::mt19937& rng) {
    return {random_block_permutation(m, rng), random_block_permutation(m, rng),
            random_block_permutation(m, rng)};
}

}  // namespace testutil
