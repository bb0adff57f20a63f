#include "divsudoku/types.hpp"

#include <algorithm>
#include <numeric>

namespace divsudoku {

bool LatinSquare::is_latin() const {
    if (n <= 0 || static_cast<int>(cells.size()) != n * n) return false;
    std::vector<uint32_t> rowmask(n, 0), colmask(n, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int s = at(r, c);
            if (s < 0 || s >= n) return false;
            uint32_t bit = 1u << s;
            if (rowmask[r] & bit) return false;
            if (colmask[c] & bit) return false;
            rowmask[r] |= bit;
            colmask[c] |= bit;
        }
    }
    return true;
}

int PartialLatinSquare::filled_count() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                          [](int s) { return s >= 0; }));
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images.size());
    for (int x = 0; x < degree(); ++x) im[images[x]] = x;
    return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& b) const {
    std::vector<int> im(images.size());
    for (int x = 0; x < degree(); ++x) im[x] = b.images[images[x]];
    return Permutation(std::move(im));
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= degree() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images[x] != x) return false;
    return true;
}

Isotopism Isotopism::identity(int degree) {
    return {Permutation::identity(degree), Permutation::identity(degree),
            Permutation::identity(degree)};
}

Isotopism Isotopism::inverse() const {
    return {alpha.inverse(), beta.inverse(), gamma.inverse()};
}

bool Isotopism::is_identity() const {
    return alpha.is_identity() && beta.is_identity() && gamma.is_identity();
}

const std::array<ConjugateLabel, 6>& ConjugateLabel::all() {
    static const std::array<ConjugateLabel, 6> labels = {
        ConjugateLabel{kIdentity},      ConjugateLabel{kTranspose},
        ConjugateLabel{kRightDivision}, ConjugateLabel{kLeftDivision},
        ConjugateLabel{kCycle123},      ConjugateLabel{kCycle132},
    };
    return labels;
}

SudokuPartition::SudokuPartition(int m, std::vector<int> blocks)
    : rank(m), block_of(std::move(blocks)) {
    if (static_cast<int>(block_of.size()) != m * m)
        throw std::invalid_argument("partition size mismatch");
    std::vector<int> counts(m, 0);
    for (int b : block_of) {
        if (b < 0 || b >= m) throw std::invalid_argument("bad block index");
        ++counts[b];
    }
    for (int c : counts)
        if (c != m) throw std::invalid_argument("blocks must have m elements");
}

std::vector<std::vector<int>> SudokuPartition::blocks() const {
    std::vector<std::vector<int>> out(rank);
    for (int e = 0; e < size(); ++e) out[block_of[e]].push_back(e);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

SudokuPartition SudokuPartition::canonical() const {
    auto bl = blocks();
    std::vector<int> bo(size());
    for (int i = 0; i < rank; ++i)
        for (int e : bl[i]) bo[e] = i;
    return SudokuPartition(rank, std::move(bo));
}

SudokuPartition SudokuPartition::mapped_by(const Permutation& p) const {
    std::vector<int> bo(size());
    for (int e = 0; e < size(); ++e) bo[p(e)] = block_of[e];
    return SudokuPartition(rank, std::move(bo)).canonical();
}

bool TriPartition::operator<(const TriPartition& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return syms < o.syms;
}

SudokuPartition standard_partition(int m) {
    std::vector<int> bo(m * m);
    for (int e = 0; e < m * m; ++e) bo[e] = e / m;
    return SudokuPartition(m, std::move(bo));
}

TriPartition standard_tri_partition(int m) {
    auto p = standard_partition(m);
    return {p, p, p};
}

}  // namespace divsudoku
