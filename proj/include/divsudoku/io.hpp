// Text formats. Squares: n lines of n whitespace-separated 1-based integers;
// '#' starts a comment; blank lines separate squares in multi-square files.
// Partitions: compact digit-block form "{123 456 789}" for n <= 9, otherwise
// pipe-delimited comma lists "1,5,9,13|2,6,10,14|...".
#pragma once

#include <string>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LatinSquare parse_square(const std::string& text);
std::vector<LatinSquare> parse_squares(const std::string& text);
std::string render_square(const LatinSquare& L);

SudokuPartition parse_partition(const std::string& text);
std::string render_partition(const SudokuPartition& p);

// Loads a square from an 81-character digit string (embedded corpus form).
LatinSquare square_from_digits(const char* digits81);
PartialLatinSquare partial_from_digits(const char* digits81);  // '.' = empty

std::string read_file(const std::string& path);

}  // namespace divsudoku
