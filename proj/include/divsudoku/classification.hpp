// Isotopism searches and the partitioning of the rank-3 extensions into
// ds-classes, main ds-classes and isotopism classes.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

struct ClassPartition {
    std::vector<LatinSquare> representatives;  // lexicographic minima
    std::vector<int> class_of;                 // input index -> class id
    std::map<int, int> size_histogram;         // class size -> multiplicity
    std::vector<std::vector<int>> members;     // class id -> input indices

    int count() const { return static_cast<int>(representatives.size()); }
};

// ds-isotopism search between two template extensions via the 324 parameter
// tuples (choices of alpha^-1 and beta^-1 on two elements of one block), with
// the remaining values chased from the template cells.
std::optional<Isotopism> ds_isotopism_between_template_extensions(const LatinSquare& Q1,
                                                                  const LatinSquare& Q2);

// General partition-preserving isotopism search between standard division
// sudokus of rank m (only m=3 is exercised): enumerate images of m-1 rows and
// m-1 columns of block 1, complete by division chase, accept on exact match.
std::optional<Isotopism> ds_isotopism_general(const LatinSquare& Q1, const LatinSquare& Q2,
                                              int rank);

// Unrestricted isotopism search: 9*8*7 images for alpha and beta on block 1,
// gamma chased; prescreened by isotopy-stable invariants.
std::optional<Isotopism> isotopism_general(const LatinSquare& Q1, const LatinSquare& Q2);

// Partition the full extension list into ds-isotopism classes by closing each
// square under its 324 parameter-tuple images.
ClassPartition ds_classes(const std::vector<LatinSquare>& extensions, int threads = 1);

// Merge ds-class representatives under conjugation + ds-isotopism.
ClassPartition main_ds_classes(const std::vector<LatinSquare>& reps, int threads = 1);

// Merge ds-class representatives under unrestricted isotopism.
ClassPartition isotopism_classes(const std::vector<LatinSquare>& reps, int threads = 1);

// Cheap isotopy-stable fingerprint: intercalate count plus cycle-type
// multisets of the row products L_x o L_x'^-1 and the column analog.
struct IsotopyFingerprint {
    int intercalates = 0;
    std::vector<std::pair<std::vector<int>, int>> row_product_types, col_product_types;
    bool operator==(const IsotopyFingerprint&) const = default;
    bool operator<(const IsotopyFingerprint& o) const;
};
IsotopyFingerprint isotopy_fingerprint(const LatinSquare& L);

// Normalize to a principal loop isotope and test associativity; a loop
// isotopic to a group is isomorphic to it, so this decides group-isotopy.
bool is_isotopic_to_group(const LatinSquare& L);

// Cycle structure helpers for the 4.3 lemma (left/right translations).
bool every_left_translation_has_4_cycle(const LatinSquare& L);
bool any_right_translation_has_4_cycle(const LatinSquare& L);

}  // namespace divsudoku
