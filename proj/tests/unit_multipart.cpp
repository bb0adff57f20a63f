#include <doctest.h>

#include <algorithm>

#include "divsudoku/corpus.hpp"
#include "divsudoku/io.hpp"
#include "divsudoku/multipart.hpp"

using namespace divsudoku;

namespace {

std::vector<std::array<std::string, 3>> rendered_tri_partitions(const LatinSquare& L) {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& tp : tri_partitions(L))
        out.push_back({render_partition(tp.rows), render_partition(tp.cols),
                       render_partition(tp.syms)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("partition universe and standard partition group sizes") {
    CHECK(partition_universe(3).size() == 280);
    CHECK(standard_partition_group(3).size() == 1296);
    CHECK(standard_partition_group(2).size() == 8);
    // Spot check: every member of the rank-3 group preserves the standard
    // partition.
    auto std3 = standard_partition(3);
    for (const auto& g : standard_partition_group(3)) CHECK(std3.mapped_by(g) == std3);
}

TEST_CASE("pi values for the tabulated squares") {
    const std::pair<int, size_t> expected[] = {{2, 2},  {17, 24}, {18, 4},  {20, 9},
                                               {27, 2}, {175, 3}, {179, 4}};
    for (auto [k, pi] : expected) CHECK(tri_partitions(corpus::appendix(k)).size() == pi);
}

TEST_CASE("tri-partition lists match the tabulated rows") {
    for (const auto& [k, rows] : corpus::kTable2) {
        auto got = rendered_tri_partitions(corpus::appendix(k));
        auto want = rows;
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("synchronized partitions of the section-5.2 squares") {
    auto fmt = [](const LatinSquare& L) {
        std::vector<std::string> out;
        for (const auto& p : sigma_partitions(L)) out.push_back(render_partition(p));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(fmt(corpus::named("L17")) ==
          std::vector<std::string>{"{123 456 789}", "{147 258 369}", "{159 267 348}",
                                   "{168 249 357}"});
    CHECK(fmt(corpus::named("L175")) ==
          std::vector<std::string>{"{123 456 789}", "{147 258 369}", "{168 249 357}"});
    CHECK(fmt(corpus::named("L179")) ==
          std::vector<std::string>{"{123 456 789}", "{149 257 368}", "{158 269 347}",
                                   "{167 248 359}"});
    CHECK(fmt(corpus::named("L0")) ==
          std::vector<std::string>{"{123 456 789}", "{147 258 369}", "{159 267 348}",
                                   "{168 249 357}"});
}

TEST_CASE("class-level sigma via orbit maximization") {
    CHECK(synchronize(corpus::appendix(17)).sigma == 4);
    CHECK(synchronize(corpus::appendix(175)).sigma == 3);
    CHECK(synchronize(corpus::appendix(179)).sigma == 4);
    CHECK(synchronize(corpus::appendix(2)).sigma == 1);
    auto res = synchronize(corpus::appendix(17));
    CHECK(res.partitions.size() == 4);
    CHECK(sigma_partitions(res.square).size() == 4);
}

TEST_CASE("affine collections") {
    std::vector<SudokuPartition> good = {
        parse_partition("{123 456 789}"), parse_partition("{147 258 369}"),
        parse_partition("{159 267 348}"), parse_partition("{168 249 357}")};
    CHECK(is_affine_collection(good));
    std::vector<SudokuPartition> bad = {parse_partition("{123 456 789}"),
                                        parse_partition("{124 357 689}")};
    CHECK(!is_affine_collection(bad));
}
