// Embedded transcriptions: the 186 appendix squares, the named squares from
// the text, the partial table, and Tables 1-2.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku::corpus {

// Raw 81-character digit strings (row-major, 1-based symbols).
extern const char* const kAppendix[186];  // DS(9,1) ... DS(9,186)
extern const char* const kL0;
extern const char* const kExampleIota;  // first section-3 example
extern const char* const kExampleMu;    // second section-3 example
extern const char* const kL17;
extern const char* const kL175;
extern const char* const kL179;
extern const char* const kQMul;   // (Q,*)
extern const char* const kQRdiv;  // (Q,/)
extern const char* const kQLdiv;  // (Q,\)
extern const char* const kTemplate;  // '.' = empty

extern const char* const kDs18Displays[3];
extern const int kDs18ColumnLabels[3][9];

// Main ds-class groupings: 45 sorted lists of appendix indices (1-based).
extern const std::vector<std::vector<int>> kTable1;

// Tri-partition lists per appendix index, each row three partitions in the
// compact "{123 456 789}" form (rows, cols, syms).
extern const std::map<int, std::vector<std::array<std::string, 3>>> kTable2;

// Parsed accessors (0-based squares).
LatinSquare appendix(int index_1_based);
LatinSquare named(const std::string& label);  // "L0","L17","L175","L179","Q","Qrdiv","Qldiv","ex-iota","ex-mu"
std::vector<std::string> named_labels();

}  // namespace divsudoku::corpus
